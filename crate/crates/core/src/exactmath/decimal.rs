use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// Compares `p/q` with `10^e` for positive `p`, `q`.
fn cmp_pow10(p: &BigInt, q: &BigInt, e: i64) -> Ordering {
    if e >= 0 {
        p.cmp(&(q * pow10(e as u32)))
    } else {
        (p * pow10((-e) as u32)).cmp(q)
    }
}

/// Renders `x` with `sig_digits` significant digits, rounding half to even.
///
/// Output is positional (never scientific); trailing zeros are kept so every
/// rendering at a given precision carries the same number of digits.
pub fn to_decimal(x: &BigRational, sig_digits: usize) -> String {
    let sig = sig_digits.max(1) as i64;
    if x.is_zero() {
        return "0".into();
    }
    let negative = x.is_negative();
    let p = x.numer().abs();
    let q = x.denom().clone();

    // 10^e <= p/q < 10^(e+1)
    let mut e = p.to_string().len() as i64 - q.to_string().len() as i64;
    while cmp_pow10(&p, &q, e) == Ordering::Less {
        e -= 1;
    }
    while cmp_pow10(&p, &q, e + 1) != Ordering::Less {
        e += 1;
    }

    let mut shift = sig - 1 - e;
    let (num, den) = if shift >= 0 {
        (&p * pow10(shift as u32), q)
    } else {
        (p, q * pow10((-shift) as u32))
    };
    let (mut digits, rem): (BigInt, BigInt) = num.div_rem(&den);
    let twice: BigInt = rem * 2;
    let round_up = match twice.cmp(&den) {
        Ordering::Greater => true,
        Ordering::Equal => digits.is_odd(),
        Ordering::Less => false,
    };
    if round_up {
        digits += 1;
        if digits == pow10(sig as u32) {
            digits /= 10;
            e += 1;
            shift -= 1;
        }
    }

    let digits = digits.to_string();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if shift <= 0 {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', (-shift) as usize));
    } else if e >= 0 {
        let split = (e + 1) as usize;
        out.push_str(&digits[..split]);
        out.push('.');
        out.push_str(&digits[split..]);
    } else {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-e - 1) as usize));
        out.push_str(&digits);
    }
    out
}
