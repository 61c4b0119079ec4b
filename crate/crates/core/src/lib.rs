//! Exact enumeration of connected vertex sets in `K_m × P_n`.
//!
//! The product is cut into `n` copies ("layers") of `K_m`. A transfer matrix
//! over footprint sizes advances the counts one layer at a time, which yields
//! the number `N` of connected sets, their total order `S`, the average order
//! `A = S / N` and the density `D = A / (m n)`, all as exact integers and
//! rationals. A brute-force oracle enumerates subsets directly for
//! cross-checking at small sizes.

pub mod aggregate;
pub mod error;
pub mod exactmath;
pub mod layer;
pub mod oracle;
pub mod order;
pub mod pell;
pub mod recurrence;
pub mod verify;

pub use aggregate::{
    average_order, count_connected_sets, density, product_result, product_result_with,
    product_sweep, total_order, ProductResult,
};
pub use error::{Error, Result};
pub use layer::{build_recurrence_matrix, f_table, FTable, RecurrenceMatrix};
pub use order::{s_table_recursive, OrderPath, STable};
