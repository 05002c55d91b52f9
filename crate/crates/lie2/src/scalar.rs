//! Field elements: arbitrary-precision rationals, or a prime field F_p
//! selected per session.
//!
//! A session works over exactly one field. Integer-valued rationals embed
//! canonically into every F_p, which lets `Scalar::zero()`/`one()` stay
//! field-agnostic; mixing two different prime moduli is a programming error
//! and panics.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// Which field a session computes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    /// The rationals (default).
    Q,
    /// The prime field F_p.
    Fp(u64),
}

impl FieldSpec {
    pub fn is_prime_field(&self) -> bool {
        matches!(self, FieldSpec::Fp(_))
    }
}

/// An exact field element.
#[derive(Debug, Clone)]
pub enum Scalar {
    /// A rational number in canonical form (reduced, positive denominator).
    Q(BigRational),
    /// An element of F_p, stored as the representative in `0..p`.
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Q(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Q(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Q(BigRational::from_integer(BigInt::from(n)))
    }

    /// n/d as a rational; panics if d = 0.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Scalar::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn fp(v: i64, p: u64) -> Self {
        let m = v.rem_euclid(p as i64) as u64;
        Scalar::Fp { v: m, p }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    /// Move a scalar into the given field. Rationals reduce mod p when the
    /// denominator is invertible; returns `None` for p | denominator.
    pub fn into_field(self, field: FieldSpec) -> Option<Scalar> {
        match (self, field) {
            (s @ Scalar::Q(_), FieldSpec::Q) => Some(s),
            (Scalar::Q(r), FieldSpec::Fp(p)) => {
                let n = mod_big(r.numer(), p);
                let d = mod_big(r.denom(), p);
                if d == 0 {
                    return None;
                }
                Some(Scalar::Fp {
                    v: mul_mod(n, inv_mod(d, p), p),
                    p,
                })
            }
            (Scalar::Fp { v, p }, FieldSpec::Fp(q)) if p == q => Some(Scalar::Fp { v, p }),
            (Scalar::Fp { .. }, _) => None,
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Scalar::Q(r) => Scalar::Q(r.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: inv_mod(*v, *p),
                p: *p,
            },
        }
    }

    /// Canonical string form: "n" for integers (and all F_p elements),
    /// "n/d" with d > 1 and gcd(n, d) = 1 otherwise.
    pub fn canonical_string(&self) -> String {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }

    /// Parse a canonical "n" or "n/d" string. Rejects non-canonical input:
    /// zero or negative denominators, unreduced fractions, and "n/1".
    pub fn parse_canonical(s: &str) -> std::result::Result<Scalar, String> {
        let parse_int = |t: &str| -> std::result::Result<BigInt, String> {
            if t.is_empty() {
                return Err("empty integer".into());
            }
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("invalid integer '{t}'"));
            }
            if digits.len() > 1 && digits.starts_with('0') {
                return Err(format!("leading zeros in '{t}'"));
            }
            t.parse::<BigInt>().map_err(|e| e.to_string())
        };
        match s.split_once('/') {
            None => Ok(Scalar::Q(BigRational::from_integer(parse_int(s)?))),
            Some((n, d)) => {
                let n = parse_int(n)?;
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(format!("zero denominator in '{s}'"));
                }
                if d.is_negative() {
                    return Err(format!("negative denominator in '{s}' (canonical form has q > 0)"));
                }
                if d.is_one() {
                    return Err(format!("denominator 1 in '{s}' must be written as an integer"));
                }
                if num::Integer::gcd(&n, &d) != BigInt::one() {
                    return Err(format!("'{s}' is not in lowest terms"));
                }
                Ok(Scalar::Q(BigRational::new_raw(n, d)))
            }
        }
    }
}

fn mod_big(n: &BigInt, p: u64) -> u64 {
    use num::ToPrimitive;
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("reduced residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid; p is prime and a != 0 mod p
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert!(r0 == 1, "element not invertible mod p");
    t0.rem_euclid(p as i128) as u64
}

/// Lift the two operands into a common field ("Z embeds in every field").
fn unify(a: &Scalar, b: &Scalar) -> (Scalar, Scalar) {
    match (a, b) {
        (Scalar::Q(_), Scalar::Q(_)) => (a.clone(), b.clone()),
        (Scalar::Fp { p, .. }, _) => {
            let f = FieldSpec::Fp(*p);
            (
                a.clone().into_field(f).expect("field mismatch"),
                b.clone().into_field(f).expect("denominator not invertible mod p"),
            )
        }
        (_, Scalar::Fp { p, .. }) => {
            let f = FieldSpec::Fp(*p);
            (
                a.clone().into_field(f).expect("denominator not invertible mod p"),
                b.clone().into_field(f).expect("field mismatch"),
            )
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match unify(self, rhs) {
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Scalar::Fp { v: x, p }, Scalar::Fp { v: y, .. }) => Scalar::Fp { v: (x + y) % p, p },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match unify(self, rhs) {
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x - y),
            (Scalar::Fp { v: x, p }, Scalar::Fp { v: y, .. }) => {
                Scalar::Fp { v: (x + p - y) % p, p }
            }
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match unify(self, rhs) {
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Scalar::Fp { v: x, p }, Scalar::Fp { v: y, .. }) => Scalar::Fp {
                v: mul_mod(x, y, p),
                p,
            },
            _ => unreachable!(),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(-r),
            Scalar::Fp { v: 0, p } => Scalar::Fp { v: 0, p: *p },
            Scalar::Fp { v, p } => Scalar::Fp { v: p - v, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

/// Equality of field elements. Rationals compare against F_p elements
/// through the canonical embedding, so `Scalar::zero()` equals the zero
/// of whatever field the session runs over.
impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Q(a), Scalar::Q(b)) => a == b,
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => p == q && a == b,
            (Scalar::Q(_), Scalar::Fp { p, .. }) => {
                self.clone().into_field(FieldSpec::Fp(*p)).as_ref() == Some(other)
            }
            (Scalar::Fp { .. }, Scalar::Q(_)) => other == self,
        }
    }
}

impl Eq for Scalar {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_parse_accepts_reduced_forms() {
        assert_eq!(Scalar::parse_canonical("3").unwrap(), Scalar::from_int(3));
        assert_eq!(Scalar::parse_canonical("-7/2").unwrap(), Scalar::ratio(-7, 2));
        assert_eq!(Scalar::parse_canonical("0").unwrap(), Scalar::zero());
    }

    #[test]
    fn canonical_parse_rejects_noncanonical() {
        for bad in ["1/0", "2/4", "3/1", "1/-2", "-1/-2", "+3", "03", "", "a", "1/ 2"] {
            assert!(Scalar::parse_canonical(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn arithmetic_matches_rationals() {
        let a = Scalar::ratio(1, 2);
        let b = Scalar::ratio(1, 3);
        assert_eq!(&a + &b, Scalar::ratio(5, 6));
        assert_eq!(&a * &b, Scalar::ratio(1, 6));
        assert_eq!(&a - &b, Scalar::ratio(1, 6));
        assert_eq!(&a / &b, Scalar::ratio(3, 2));
        assert_eq!(-&a, Scalar::ratio(-1, 2));
    }

    #[test]
    fn fp_arithmetic_and_embedding() {
        let p = 7;
        let a = Scalar::fp(3, p);
        let b = Scalar::fp(5, p);
        assert_eq!(&a + &b, Scalar::fp(1, p));
        assert_eq!(&a * &b, Scalar::fp(1, p));
        assert_eq!(&a - &b, Scalar::fp(-2, p));
        assert_eq!(a.inv(), Scalar::fp(5, p));
        // integers coerce into F_p
        assert_eq!(&Scalar::one() + &Scalar::fp(6, p), Scalar::fp(0, p));
        assert_eq!(
            Scalar::ratio(1, 2).into_field(FieldSpec::Fp(7)),
            Some(Scalar::fp(4, 7))
        );
        assert_eq!(Scalar::ratio(1, 7).into_field(FieldSpec::Fp(7)), None);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(Scalar::ratio(-4, 6).to_string(), "-2/3");
        assert_eq!(Scalar::ratio(4, 2).to_string(), "2");
        assert_eq!(Scalar::fp(9, 7).to_string(), "2");
    }
}
