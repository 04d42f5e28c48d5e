//! Elements of Q or of a cyclotomic field Q(ζₙ) = Q[z]/Φₙ(z).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::MathError;

pub type Rational = BigRational;

/// The coefficient field. Order 1 is plain Q; cyclotomic orders 1 and 2
/// collapse to Q because ζ₁ = 1 and ζ₂ = -1 are rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    order: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldKind {
    Rational,
    Cyclotomic,
}

impl FieldSpec {
    pub fn rational() -> Self {
        FieldSpec { order: 1 }
    }

    pub fn cyclotomic(n: u32) -> Self {
        assert!(n >= 1, "cyclotomic order must be positive");
        if n <= 2 {
            FieldSpec::rational()
        } else {
            FieldSpec { order: n }
        }
    }

    pub fn kind(&self) -> FieldKind {
        if self.order == 1 {
            FieldKind::Rational
        } else {
            FieldKind::Cyclotomic
        }
    }

    /// n for Q(ζₙ); 1 for Q.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Dimension over Q, i.e. φ(n).
    pub fn degree(&self) -> usize {
        cyclotomic_poly(self.order).len() - 1
    }

    /// A primitive `m`-th root of unity, if the field contains one.
    pub fn root_of_unity(&self, m: u32) -> Option<Scalar> {
        assert!(m >= 1);
        match m {
            1 => return Some(Scalar::one(*self)),
            2 => return Some(-Scalar::one(*self)),
            _ => {}
        }
        let n = self.order;
        if n == 1 || !n.is_multiple_of(m) {
            return None;
        }
        Some(Scalar::zeta_pow(*self, (n / m) as i64))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Cyclotomic => write!(f, "Q(z{})", self.order),
        }
    }
}

fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    debug_assert_eq!(num.len() as u32 - 1, euler_phi(n));
    cache.lock().unwrap().insert(n, num.clone());
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    let qlen = num.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd] / lead;
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Exact element of a [`FieldSpec`], stored in the power basis
/// 1, z, ..., z^(φ(n)-1) and always reduced. Zero keeps no coefficients so that
/// large sparse matrices stay cheap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    coeffs: Vec<Rational>,
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Scalar {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_int(field: FieldSpec, v: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_frac(field: FieldSpec, num: i64, den: i64) -> Self {
        Self::from_rational(field, Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(field: FieldSpec, r: Rational) -> Self {
        if r.is_zero() {
            return Self::zero(field);
        }
        let mut coeffs = vec![Rational::zero(); field.degree()];
        coeffs[0] = r;
        Scalar { field, coeffs }
    }

    /// Builds the reduction of Σ cᵢ zⁱ for arbitrary length input.
    pub fn from_poly(field: FieldSpec, poly: Vec<Rational>) -> Self {
        Self::normalized(field, reduce(field, poly))
    }

    fn normalized(field: FieldSpec, coeffs: Vec<Rational>) -> Self {
        if coeffs.iter().all(|c| c.is_zero()) {
            Self::zero(field)
        } else {
            Scalar { field, coeffs }
        }
    }

    /// ζₙ^k for the field's own ζₙ (k may be negative).
    pub fn zeta_pow(field: FieldSpec, k: i64) -> Self {
        let n = field.order as i64;
        if n == 1 {
            return Self::one(field);
        }
        let e = k.rem_euclid(n) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Self::from_poly(field, poly)
    }

    /// ω^k for the primitive n-th root of unity ω = ζ_N^(N/n) of the field.
    pub fn root_pow(field: FieldSpec, n: u32, k: i64) -> Self {
        field
            .root_of_unity(n)
            .expect("field lacks the requested root of unity")
            .pow(k.rem_euclid(n as i64))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Power-basis coefficients, always of length φ(n).
    pub fn coeffs(&self) -> Vec<Rational> {
        if self.coeffs.is_empty() {
            vec![Rational::zero(); self.field.degree()]
        } else {
            self.coeffs.clone()
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        !self.coeffs.is_empty()
            && self.coeffs[0].is_one()
            && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.is_empty() {
            Some(Rational::zero())
        } else if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn pow(&self, mut e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Galois conjugate z ↦ z^k (k coprime to n).
    fn galois(&self, k: u32) -> Self {
        let n = self.field.order;
        let mut poly = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(i as u64 * k as u64 % n as u64) as usize] += c;
            }
        }
        Self::from_poly(self.field, poly)
    }

    /// Inverse via the product of the nontrivial Galois conjugates over the norm.
    pub fn inv(&self) -> Result<Self, MathError> {
        if self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        let n = self.field.order;
        if n == 1 {
            return Ok(Self::from_rational(self.field, self.coeffs[0].recip()));
        }
        let mut others = Scalar::one(self.field);
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (&others * self)
            .as_rational()
            .expect("norm of a cyclotomic element is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() || self.is_zero() {
            return Self::zero(self.field);
        }
        Scalar {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Self, MathError> {
        Ok(self * &other.inv()?)
    }

    /// Parses the textual grammar, e.g. `1/2 + 3*z^2`.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Self, MathError> {
        parse_scalar(text, field)
    }
}

fn reduce(field: FieldSpec, mut poly: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_poly(field.order);
    let d = phi.len() - 1;
    // Φₙ is monic, so plain synthetic division suffices.
    if poly.len() > d {
        for top in (d..poly.len()).rev() {
            if poly[top].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[top], Rational::zero());
            for (j, &pj) in phi[..d].iter().enumerate() {
                if pj != 0 {
                    let idx = top - d + j;
                    poly[idx] -= &c * Rational::from_integer(BigInt::from(pj));
                }
            }
        }
        poly.truncate(d);
    }
    poly.resize(d, Rational::zero());
    poly
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        debug_assert_eq!(self.field, rhs.field);
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        Scalar::normalized(
            self.field,
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        debug_assert_eq!(self.field, rhs.field);
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return -rhs;
        }
        Scalar::normalized(
            self.field,
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        debug_assert_eq!(self.field, rhs.field);
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero(self.field);
        }
        let d = self.coeffs.len();
        if d == 1 {
            return Scalar {
                field: self.field,
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Scalar::from_poly(self.field, prod)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            field: self.field,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(self.clone())
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
        if self.coeffs.iter().all(|c| c.is_zero()) {
            self.coeffs.clear();
        }
    }
}

impl Scalar {
    /// self += a * b.
    #[inline]
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.coeffs.len() == 1 {
            let p = &a.coeffs[0] * &b.coeffs[0];
            if self.coeffs.is_empty() {
                self.coeffs.push(p);
            } else {
                self.coeffs[0] += p;
                if self.coeffs[0].is_zero() {
                    self.coeffs.clear();
                }
            }
        } else {
            *self += &(a * b);
        }
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = match i {
                0 => fmt_rational(&a),
                _ => {
                    let zpart = if i == 1 {
                        "z".to_string()
                    } else {
                        format!("z^{i}")
                    };
                    if a.is_one() {
                        zpart
                    } else {
                        format!("{}*{}", fmt_rational(&a), zpart)
                    }
                }
            };
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Parses a polynomial in `z` with rational coefficients and reduces it.
pub fn parse_scalar(text: &str, field: FieldSpec) -> Result<Scalar, MathError> {
    let err = |msg: &str| MathError::Parse(format!("{msg} in {text:?}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err("empty scalar"));
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut poly: Vec<Rational> = Vec::new();
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = Rational::one();
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -sign;
            }
            pos += 1;
        } else if !first {
            return Err(err("expected '+' or '-'"));
        }
        first = false;
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let coeff = if pos > start {
            Rational::from_str(&s[start..pos]).map_err(|_| err("bad rational coefficient"))?
        } else {
            Rational::one()
        };
        let had_coeff = pos > start;
        let mut power = 0usize;
        if pos < bytes.len() && bytes[pos] == b'*' {
            if !had_coeff {
                return Err(err("dangling '*'"));
            }
            pos += 1;
            if pos >= bytes.len() || bytes[pos] != b'z' {
                return Err(err("expected 'z' after '*'"));
            }
        }
        if pos < bytes.len() && bytes[pos] == b'z' {
            if field.kind() == FieldKind::Rational {
                return Err(MathError::Parse(format!(
                    "symbol z used with the rational field in {text:?}"
                )));
            }
            pos += 1;
            power = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let ps = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if ps == pos {
                    return Err(err("missing exponent"));
                }
                power = s[ps..pos].parse().map_err(|_| err("bad exponent"))?;
            }
        } else if !had_coeff {
            return Err(err("expected a term"));
        }
        if coeff.denom().is_zero() {
            return Err(err("zero denominator"));
        }
        if poly.len() <= power {
            poly.resize(power + 1, Rational::zero());
        }
        poly[power] += sign * coeff;
    }
    Ok(Scalar::from_poly(field, poly))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(5), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn parse_examples() {
        let q3 = FieldSpec::cyclotomic(3);
        assert!(parse_scalar("0", q3).unwrap().is_zero());
        assert_eq!(parse_scalar("z^2", q3).unwrap().to_string(), "-1 - z");
        let q4 = FieldSpec::cyclotomic(4);
        assert!(parse_scalar("z^4", q4).unwrap().is_one());
        assert!(parse_scalar("z", FieldSpec::rational()).is_err());
        assert!(parse_scalar("1/0", FieldSpec::rational()).is_err());
        assert!(parse_scalar("1 +", FieldSpec::rational()).is_err());
    }

    #[test]
    fn format_round_trip() {
        let q5 = FieldSpec::cyclotomic(5);
        for t in ["1/2 + 3*z^2", "-z - 2/3*z^3", "7", "z"] {
            let s = parse_scalar(t, q5).unwrap();
            assert_eq!(s.to_string(), t);
            assert_eq!(parse_scalar(&s.to_string(), q5).unwrap(), s);
        }
    }

    #[test]
    fn orders_one_and_two_are_rational() {
        assert_eq!(FieldSpec::cyclotomic(2), FieldSpec::rational());
        let f = FieldSpec::rational();
        assert_eq!(f.root_of_unity(2).unwrap(), Scalar::from_int(f, -1));
    }

    #[test]
    fn inverse_of_cyclotomic() {
        let q = FieldSpec::cyclotomic(5);
        let a = parse_scalar("2 - z + 1/3*z^3", q).unwrap();
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        let z = Scalar::zeta_pow(q, 1);
        assert_eq!(z.pow(5), Scalar::one(q));
        assert_eq!(z.pow(-1), Scalar::zeta_pow(q, 4));
    }
}
