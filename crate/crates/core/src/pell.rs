//! The ladder `K_2 × P_n`.
//!
//! For `m = 2` the footprint counts are Pell-family numbers:
//! `f_1(2,k)` is the Pell number `P(k)` (0, 1, 2, 5, 12, ...) and `f(2,k)` is
//! the half-companion Pell number `H(k+1)` (1, 3, 7, 17, 41, ...). Everything
//! here is computed by integer recurrences; the `√2` closed forms are
//! evaluated in ℤ[√2] only to be compared against them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::QuadInt;

/// Pell numbers and the ladder totals `f(2,k)`, both indexed from `k = 0`.
///
/// `halfcomp(0) = 1` extends `f(2,·)` one step back through its recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellPair {
    pell: Vec<BigInt>,
    halfcomp: Vec<BigInt>,
}

impl Default for PellPair {
    fn default() -> Self {
        PellPair {
            pell: vec![BigInt::zero(), BigInt::one()],
            halfcomp: vec![BigInt::one(), BigInt::from(3)],
        }
    }
}

impl PellPair {
    pub fn up_to(k_max: usize) -> Self {
        let mut p = PellPair::default();
        p.extend_to(k_max);
        p
    }

    pub fn extend_to(&mut self, k_max: usize) {
        while self.pell.len() <= k_max {
            let k = self.pell.len();
            let p = BigInt::from(2) * &self.pell[k - 1] + &self.pell[k - 2];
            let h = BigInt::from(2) * &self.halfcomp[k - 1] + &self.halfcomp[k - 2];
            self.pell.push(p);
            self.halfcomp.push(h);
        }
    }

    pub fn len(&self) -> usize {
        self.pell.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `f_1(2,k)`, the Pell number.
    pub fn pell(&self, k: usize) -> &BigInt {
        &self.pell[k]
    }

    /// `f(2,k)`.
    pub fn halfcomp(&self, k: usize) -> &BigInt {
        &self.halfcomp[k]
    }
}

fn require_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::Domain(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

fn halve(x: BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = x.div_rem(&BigInt::from(2));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Invariant(format!(
            "{what}: odd value {x} cannot be halved"
        )))
    }
}

fn int(n: usize) -> BigInt {
    BigInt::from(n)
}

/// `f(2,k) = ((1-√2)^(k+1) + (1+√2)^(k+1)) / 2`, evaluated in ℤ[√2].
pub fn closed_form_f2(k: usize) -> Result<BigInt> {
    require_positive("k", k)?;
    let power = QuadInt::silver().pow(k as u64 + 1);
    let sum = &power + &power.conjugate();
    if !sum.b.is_zero() {
        return Err(Error::Invariant(
            "conjugate sum has an irrational part".into(),
        ));
    }
    halve(sum.a, "f(2,k) closed form")
}

/// `f_1(2,k) = ((1+√2)^k - (1-√2)^k) / (2√2)`, evaluated in ℤ[√2].
pub fn closed_form_f1(k: usize) -> Result<BigInt> {
    require_positive("k", k)?;
    let power = QuadInt::silver().pow(k as u64);
    let diff = &power - &power.conjugate();
    if !diff.a.is_zero() {
        return Err(Error::Invariant(
            "conjugate difference has a rational part".into(),
        ));
    }
    // (2b√2) / (2√2) = b
    halve(diff.b, "f_1(2,k) closed form")
}

/// `N(K_2 × P_n) = (f(2,n+2) - 4n - 7) / 2`.
pub fn ladder_count(n: usize) -> Result<BigInt> {
    require_positive("n", n)?;
    let p = PellPair::up_to(n + 2);
    ladder_count_from(&p, n)
}

fn ladder_count_from(p: &PellPair, n: usize) -> Result<BigInt> {
    halve(p.halfcomp(n + 2) - 4 * int(n) - 7, "ladder count numerator")
}

/// A closed-form summation checked against the direct sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumIdentity {
    pub name: &'static str,
    pub direct: BigInt,
    pub closed: BigInt,
}

/// Checks the ladder summation identities at `n`:
///
/// * `Σ f(2,k) = (f(2,n+1) + f(2,n) - 4) / 2`
/// * `Σ k f(2,k) = (n f(2,n+2) - (n+1) f(2,n+1) + 3) / 2`
/// * `Σ f_1(2,k+2) = (f(2,n+2) - 7) / 2`
/// * `Σ k f_1(2,k+2) = (2(n-1) f_1(2,n+2) + (3n-1) f_1(2,n+1) + n f_1(2,n) + 5) / 2`
/// * `Σ k² f(2,k) = ((2n²+2n+1) f_1(2,n+2) + (1-2n) f_1(2,n+3) - 7) / 2`
///
/// with every sum over `k = 1..=n`.
pub fn ladder_sum_identities(n: usize) -> Result<Vec<SumIdentity>> {
    require_positive("n", n)?;
    let p = PellPair::up_to(n + 3);
    let f = |k: usize| p.halfcomp(k);
    let f1 = |k: usize| p.pell(k);
    let nn = int(n);

    let direct = [
        (1..=n).map(f).sum::<BigInt>(),
        (1..=n).map(|k| int(k) * f(k)).sum(),
        (1..=n).map(|k| f1(k + 2)).sum(),
        (1..=n).map(|k| int(k) * f1(k + 2)).sum(),
        (1..=n).map(|k| int(k * k) * f(k)).sum(),
    ];
    let doubled = [
        f(n + 1) + f(n) - 4,
        &nn * f(n + 2) - (&nn + 1) * f(n + 1) + 3,
        f(n + 2) - 7,
        2 * (&nn - 1) * f1(n + 2) + (3 * &nn - 1) * f1(n + 1) + &nn * f1(n) + 5,
        (2 * &nn * &nn + 2 * &nn + 1) * f1(n + 2) + (1 - 2 * &nn) * f1(n + 3) - 7,
    ];
    let names = [
        "sum of f(2,k)",
        "sum of k*f(2,k)",
        "sum of f_1(2,k+2)",
        "sum of k*f_1(2,k+2)",
        "sum of k^2*f(2,k)",
    ];

    let mut out = Vec::with_capacity(names.len());
    for ((name, direct), doubled) in names.into_iter().zip(direct).zip(doubled) {
        if BigInt::from(2) * &direct != doubled {
            return Err(Error::validation(
                format!("{name} at n={n}"),
                &direct,
                BigRational::new(doubled, BigInt::from(2)),
            ));
        }
        out.push(SumIdentity {
            name,
            closed: doubled / 2,
            direct,
        });
    }
    Ok(out)
}

fn ladder_weighted_order(p: &PellPair, n: usize) -> BigInt {
    let nn = int(n);
    (21 * &nn - 32) * p.halfcomp(n) + (19 - 12 * &nn) * p.pell(n) + 10 * &nn + 32
}

/// `A(K_2 × P_n)` in closed form.
///
/// The denominator is `2 (f(2,n+2) - 4n - 7)`, which is `4 N(K_2 × P_n)`.
pub fn ladder_average(n: usize) -> Result<BigRational> {
    require_positive("n", n)?;
    let p = PellPair::up_to(n + 2);
    let denominator = 4 * ladder_count_from(&p, n)?;
    Ok(BigRational::new(ladder_weighted_order(&p, n), denominator))
}

/// The ladder average in Pell–Lucas form, with `β(k) = f(2,k-1)` and `β̄(k) = P(k)`:
/// `((32 - 45β̄(n) - 32β(n)) + n(10 + 21β(n) + 30β̄(n))) / (2(β(n+3) - 4n - 7))`.
pub fn vince_average(n: usize) -> Result<BigRational> {
    require_positive("n", n)?;
    let p = PellPair::up_to(n + 2);
    let beta = |k: usize| p.halfcomp(k - 1);
    let beta_bar = |k: usize| p.pell(k);
    let nn = int(n);
    let numerator =
        (32 - 45 * beta_bar(n) - 32 * beta(n)) + &nn * (10 + 21 * beta(n) + 30 * beta_bar(n));
    let denominator = 2 * (beta(n + 3) - 4 * &nn - 7);
    Ok(BigRational::new(numerator, denominator))
}

/// `D(K_2 × P_n) = A(K_2 × P_n) / (2n)`.
pub fn ladder_density(n: usize) -> Result<BigRational> {
    Ok(ladder_average(n)? / BigInt::from(2 * n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn sequences() {
        let p = PellPair::up_to(6);
        let pell: Vec<_> = (0..=6).map(|k| p.pell(k).clone()).collect();
        let half: Vec<_> = (0..=6).map(|k| p.halfcomp(k).clone()).collect();
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(pell, ints(&[0, 1, 2, 5, 12, 29, 70]));
        assert_eq!(half, ints(&[1, 3, 7, 17, 41, 99, 239]));
        for k in 1..=6 {
            assert_eq!(*p.halfcomp(k), p.halfcomp(k - 1) + 2 * p.pell(k));
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_f2(1).unwrap(), BigInt::from(3));
        assert_eq!(closed_form_f2(2).unwrap(), BigInt::from(7));
        assert_eq!(closed_form_f2(6).unwrap(), BigInt::from(239));
        assert_eq!(closed_form_f1(1).unwrap(), BigInt::from(1));
        assert_eq!(closed_form_f1(2).unwrap(), BigInt::from(2));
        assert_eq!(closed_form_f1(5).unwrap(), BigInt::from(29));
        assert!(closed_form_f1(0).is_err());
        let p = PellPair::up_to(200);
        for k in 1..=200 {
            assert_eq!(&closed_form_f2(k).unwrap(), p.halfcomp(k));
            assert_eq!(&closed_form_f1(k).unwrap(), p.pell(k));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(ladder_count(1).unwrap(), BigInt::from(3));
        assert_eq!(ladder_count(2).unwrap(), BigInt::from(13));
        assert_eq!(ladder_count(3).unwrap(), BigInt::from(40));
        assert!(ladder_count(0).is_err());
        let p = PellPair::up_to(502);
        for n in 1..=500 {
            let numerator: BigInt = p.halfcomp(n + 2) - 4 * int(n) - 7;
            assert!(numerator.is_even());
        }
    }

    #[test]
    fn sum_identities() {
        let r = ladder_sum_identities(3).unwrap();
        assert_eq!(r[0].direct, BigInt::from(27));
        assert_eq!(r[0].closed, BigInt::from(27));
        let r = ladder_sum_identities(1).unwrap();
        assert_eq!(r[1].direct, BigInt::from(3));
        assert_eq!(ladder_sum_identities(5).unwrap().len(), 5);
    }

    #[test]
    fn pell_sum_needs_shifted_index() {
        // Σ_{k≤n} f_1(2,k+2) is (f(2,n+2) - 7)/2; with f(2,n+3) it already fails at n = 1.
        let p = PellPair::up_to(4);
        assert_eq!(p.pell(3) * 2, p.halfcomp(3) - 7);
        assert_ne!(p.pell(3) * 2, p.halfcomp(4) - 7);
    }

    #[test]
    fn pell_convolution_and_layer_sums() {
        let p = PellPair::up_to(40);
        for k in 1..=38 {
            let conv: BigInt = (1..=k).map(|i| p.pell(i) * p.pell(k + 1 - i)).sum();
            assert_eq!(4 * &conv, int(k + 2) * p.halfcomp(k) - p.pell(k + 2));
            let layer = 2 * int(k) * p.halfcomp(k) - 2 * conv;
            assert_eq!(2 * layer, (3 * int(k) - 2) * p.halfcomp(k) + p.pell(k + 2));
        }
    }

    #[test]
    fn averages() {
        assert_eq!(ladder_average(1).unwrap(), q(4, 3));
        assert_eq!(ladder_average(2).unwrap(), q(28, 13));
        assert_eq!(vince_average(1).unwrap(), q(4, 3));
        assert_eq!(vince_average(2).unwrap(), q(28, 13));
        assert_eq!(ladder_density(1).unwrap(), q(2, 3));
        assert_eq!(ladder_density(2).unwrap(), q(7, 13));
        for n in 1..=60 {
            assert_eq!(
                ladder_average(n).unwrap(),
                vince_average(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn literal_denominator_reading_disagrees() {
        // 2f(2,n+2) - 4n - 7 read with ordinary precedence gives 16/23 at n = 1.
        let p = PellPair::up_to(3);
        let literal = BigRational::new(ladder_weighted_order(&p, 1), 2 * p.halfcomp(3) - 11);
        assert_eq!(literal, q(16, 23));
        assert_ne!(literal, ladder_average(1).unwrap());
    }
}
