//! Gaussian binomials and q-factorials, computed as integer polynomials in q
//! and evaluated afterwards, so roots of unity never hit a zero denominator.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scalar::{Rational, Scalar};
use super::MathError;

type Poly = Vec<BigInt>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials; the divisor must be monic up to sign.
fn poly_div_exact(num: &Poly, den: &Poly) -> Poly {
    let mut rem = num.clone();
    while rem.len() > 1 && rem.last().unwrap().is_zero() {
        rem.pop();
    }
    let mut den = den.clone();
    while den.len() > 1 && den.last().unwrap().is_zero() {
        den.pop();
    }
    let dd = den.len() - 1;
    let lead = den.last().unwrap().clone();
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let qlen = rem.len() - dd;
    let mut q = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = &rem[i + dd] / &lead;
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(
        rem.iter().all(|r| r.is_zero()),
        "inexact polynomial division"
    );
    q
}

/// 1 - x^e
fn one_minus_pow(e: usize) -> Poly {
    let mut p = vec![BigInt::zero(); e + 1];
    p[0] = BigInt::one();
    p[e] -= BigInt::one();
    p
}

fn eval(poly: &Poly, q: &Scalar) -> Scalar {
    let field = q.field();
    let mut acc = Scalar::zero(field);
    for c in poly.iter().rev() {
        acc = &acc * q;
        acc += &Scalar::from_rational(field, Rational::from_integer(c.clone()));
    }
    acc
}

/// The Gaussian binomial as a polynomial in q.
pub fn qbinomial_poly(k: usize, i: usize) -> Vec<BigInt> {
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for t in 1..=i {
        num = poly_mul(&num, &one_minus_pow(k - i + t));
        den = poly_mul(&den, &one_minus_pow(t));
    }
    poly_div_exact(&num, &den)
}

/// (k choose i)_q = ∏_{t=1..i} (1 - q^{k-i+t}) / (1 - q^t).
pub fn qbinomial(k: i64, i: i64, q: &Scalar) -> Result<Scalar, MathError> {
    if i < 0 || i > k {
        return Err(MathError::Domain(format!("q-binomial ({k} choose {i})")));
    }
    Ok(eval(&qbinomial_poly(k as usize, i as usize), q))
}

/// [t]_q = 1 + q + ... + q^{t-1}.
pub fn qinteger(t: usize, q: &Scalar) -> Scalar {
    if t == 0 {
        return Scalar::zero(q.field());
    }
    eval(&vec![BigInt::one(); t], q)
}

/// [i]_q! = [1]_q [2]_q ... [i]_q.
pub fn qfactorial(i: usize, q: &Scalar) -> Scalar {
    let mut acc = Scalar::one(q.field());
    for t in 1..=i {
        acc = &acc * &qinteger(t, q);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::FieldSpec;

    #[test]
    fn small_values() {
        let f = FieldSpec::cyclotomic(3);
        let q = Scalar::zeta_pow(f, 1);
        assert!(qbinomial(5, 0, &q).unwrap().is_one());
        assert_eq!(qbinomial(2, 1, &q).unwrap(), &Scalar::one(f) + &q);
        assert!(qbinomial(2, 3, &q).is_err());
        // [3]_q = 0 at a primitive cube root of unity, yet (3 choose 1)_q is finite.
        assert!(qinteger(3, &q).is_zero());
        assert!(qbinomial(3, 1, &q).unwrap().is_zero());
    }

    #[test]
    fn polynomial_coefficients() {
        let p: Vec<i64> = qbinomial_poly(4, 2)
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(p, vec![1, 1, 2, 1, 1]);
    }
}
