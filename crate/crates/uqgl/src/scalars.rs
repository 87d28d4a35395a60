//! Exact coefficient arithmetic: Laurent polynomials in s = q^{1/2} over the
//! rationals, localized at q - q^{-1}.
//!
//! Exponents count powers of s, so q^{1/2} has exponent 1 and q has
//! exponent 2. Half-integer powers of q therefore need no fractional
//! exponent type. The only denominators that ever arise are powers of
//! q - q^{-1}; a [`QScalar`] tracks that power explicitly next to its
//! numerator polynomial and keeps itself in canonical (fully reduced) form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational coefficient.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    /// No exact quotient exists.
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
}

/// A Laurent polynomial in s = q^{1/2} with exact rational coefficients.
///
/// Canonical sparse form: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::s_power(0)
    }

    /// The monomial s^e.
    pub fn s_power(e: i64) -> Self {
        Self::monomial(e, Rational::one())
    }

    /// The monomial q^k = s^{2k}.
    pub fn q_power(k: i64) -> Self {
        Self::s_power(2 * k)
    }

    pub fn monomial(e: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    /// q - q^{-1} = s^2 - s^{-2}.
    pub fn q_minus_q_inv() -> Self {
        let mut p = Self::s_power(2);
        p.add_term(-2, -Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.terms.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// If the polynomial is a single term, return (exponent, coefficient).
    pub fn as_monomial(&self) -> Option<(i64, Rational)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((*e, c.clone()))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by the monomial s^e (an exponent shift).
    pub fn shifted(&self, e: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Exact division: returns c with c * d = self, or `NotDivisible`.
    ///
    /// The divisor must be nonzero.
    pub fn div_exact(&self, d: &Self) -> Result<Self, ScalarError> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d_max = d.max_exp().unwrap();
        let d_lead = d.coeff(d_max);
        // In an integral domain bottom degrees add exactly, so the quotient
        // cannot reach below this exponent.
        let q_min_bound = self.min_exp().unwrap() - d.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_max = rem.max_exp().unwrap();
            let shift = r_max - d_max;
            if shift < q_min_bound {
                return Err(ScalarError::NotDivisible);
            }
            let qc = rem.coeff(r_max) / d_lead.clone();
            quot.add_term(shift, qc.clone());
            for (e, c) in &d.terms {
                rem.add_term(e + shift, -(c * &qc));
            }
        }
        Ok(quot)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_q_power(e: i64) -> String {
    // e counts powers of s = q^{1/2}
    if e == 0 {
        return "1".to_string();
    }
    if e == 2 {
        return "q".to_string();
    }
    if e % 2 == 0 {
        format!("q^{{{}}}", e / 2)
    } else {
        format!("q^{{{e}/2}}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest power first
        for (e, c) in self.terms.iter().rev() {
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", fmt_q_power(*e))?;
            } else {
                write!(f, "{mag}*{}", fmt_q_power(*e))?;
            }
        }
        Ok(())
    }
}

/// An element of the Laurent-polynomial ring localized at q - q^{-1}:
/// `num * (q - q^{-1})^{-denom_pow}`.
///
/// Canonical form: either `denom_pow` is 0 or `num` is not exactly
/// divisible by q - q^{-1}; the zero element stores `denom_pow` 0.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QScalar {
    num: LaurentPoly,
    denom_pow: u32,
}

impl QScalar {
    pub fn new(num: LaurentPoly, denom_pow: u32) -> Self {
        let mut s = QScalar { num, denom_pow };
        s.canonicalize();
        s
    }

    pub fn zero() -> Self {
        QScalar::default()
    }

    pub fn one() -> Self {
        QScalar {
            num: LaurentPoly::one(),
            denom_pow: 0,
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        QScalar {
            num: p,
            denom_pow: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(n))
    }

    pub fn rational(c: Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// s^e = q^{e/2}.
    pub fn s_power(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::s_power(e))
    }

    /// q^k.
    pub fn q_power(k: i64) -> Self {
        Self::s_power(2 * k)
    }

    /// (q - q^{-1})^{-k}.
    pub fn inv_q_minus_q_inv_pow(k: u32) -> Self {
        QScalar {
            num: LaurentPoly::one(),
            denom_pow: k,
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom_pow(&self) -> u32 {
        self.denom_pow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.denom_pow == 0 && self.num.is_one()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.denom_pow = 0;
            return;
        }
        let d = LaurentPoly::q_minus_q_inv();
        while self.denom_pow > 0 {
            match self.num.div_exact(&d) {
                Ok(q) => {
                    self.num = q;
                    self.denom_pow -= 1;
                }
                Err(_) => break,
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        if self.num.is_zero() {
            return self.denom_pow == 0;
        }
        self.denom_pow == 0
            || self
                .num
                .div_exact(&LaurentPoly::q_minus_q_inv())
                .is_err()
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.denom_pow.max(other.denom_pow);
        let d = LaurentPoly::q_minus_q_inv();
        let mut a = self.num.clone();
        for _ in self.denom_pow..k {
            a = a.mul(&d);
        }
        let mut b = other.num.clone();
        for _ in other.denom_pow..k {
            b = b.mul(&d);
        }
        QScalar::new(a.add(&b), k)
    }

    pub fn neg(&self) -> Self {
        QScalar {
            num: self.num.neg(),
            denom_pow: self.denom_pow,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        QScalar::new(self.num.mul(&other.num), self.denom_pow + other.denom_pow)
    }

    /// Multiply by s^e. Exponent shifts cannot change divisibility by
    /// q - q^{-1}, so the result is canonical as-is.
    pub fn mul_s_power(&self, e: i64) -> Self {
        QScalar {
            num: self.num.shifted(e),
            denom_pow: self.denom_pow,
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QScalar {
            num: self.num.scale(c),
            denom_pow: self.denom_pow,
        }
    }

    /// If the value is `c * s^e` with `denom_pow` 0, return (e, c).
    pub fn as_monomial(&self) -> Option<(i64, Rational)> {
        if self.denom_pow != 0 {
            return None;
        }
        self.num.as_monomial()
    }
}

/// The q-integer [n] = (q^n - q^{-n})/(q - q^{-1}).
///
/// Constructed directly as q^{n-1} + q^{n-3} + ... + q^{1-n}; the result has
/// denominator power 0.
pub fn q_integer(n: u32) -> QScalar {
    let mut p = LaurentPoly::zero();
    let n = i64::from(n);
    let mut e = n - 1;
    while e >= 1 - n {
        p.add_term(2 * e, Rational::one());
        e -= 2;
    }
    QScalar::from_laurent(p)
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom_pow == 0 {
            return write!(f, "{}", self.num);
        }
        let denom = if self.denom_pow == 1 {
            "(q-q^{-1})".to_string()
        } else {
            format!("(q-q^{{-1}})^{}", self.denom_pow)
        };
        if self.num.num_terms() == 1 && !self.num.iter().next().unwrap().1.is_negative() {
            write!(f, "{}/{}", self.num, denom)
        } else {
            write!(f, "({})/{}", self.num, denom)
        }
    }
}

// ---------------------------------------------------------------------------
// JSON form: { "num": [[exponent_of_s, "rational"], ...] sorted, "denom_pow": k }
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct QScalarJson {
    num: Vec<(i64, String)>,
    denom_pow: u32,
}

impl Serialize for QScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let num = self
            .num
            .iter()
            .map(|(e, c)| (*e, c.to_string()))
            .collect();
        QScalarJson {
            num,
            denom_pow: self.denom_pow,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = QScalarJson::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        let mut last: Option<i64> = None;
        for (e, s) in &raw.num {
            if let Some(prev) = last {
                if *e <= prev {
                    return Err(D::Error::custom(
                        "numerator exponents must be strictly increasing",
                    ));
                }
            }
            last = Some(*e);
            let c = Rational::from_str(s)
                .map_err(|err| D::Error::custom(format!("bad rational {s:?}: {err}")))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient stored in numerator"));
            }
            p.add_term(*e, c);
        }
        Ok(QScalar::new(p, raw.denom_pow))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q_power(1)
    }

    #[test]
    fn product_of_commutator_factors() {
        // (q - q^{-1}) * (q + q^{-1}) = q^2 - q^{-2}
        let a = LaurentPoly::q_minus_q_inv();
        let b = q().add(&LaurentPoly::q_power(-1));
        let mut expect = LaurentPoly::q_power(2);
        expect.add_term(-4, -Rational::one());
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn additive_identity() {
        let p = QScalar::new(LaurentPoly::q_minus_q_inv(), 3);
        assert_eq!(QScalar::zero().add(&p), p);
    }

    #[test]
    fn half_powers_compose() {
        // q^{1/2} * q^{1/2} = q
        let s = QScalar::s_power(1);
        assert_eq!(s.mul(&s), QScalar::q_power(1));
    }

    #[test]
    fn div_exact_factorization() {
        // (q^2 - q^{-2}) / (q - q^{-1}) = q + q^{-1}
        let mut a = LaurentPoly::q_power(2);
        a.add_term(-4, -Rational::one());
        let d = LaurentPoly::q_minus_q_inv();
        let c = a.div_exact(&d).unwrap();
        assert_eq!(c, q().add(&LaurentPoly::q_power(-1)));
    }

    #[test]
    fn div_exact_identity_divisor() {
        let p = LaurentPoly::q_minus_q_inv().mul(&LaurentPoly::s_power(3));
        assert_eq!(p.div_exact(&LaurentPoly::one()).unwrap(), p);
    }

    #[test]
    fn div_exact_degree_obstruction() {
        let r = LaurentPoly::one().div_exact(&LaurentPoly::q_minus_q_inv());
        assert_eq!(r, Err(ScalarError::NotDivisible));
    }

    #[test]
    fn q_integer_small_values() {
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(1), QScalar::one());
        let expect = QScalar::from_laurent(q().add(&LaurentPoly::q_power(-1)));
        assert_eq!(q_integer(2), expect);
    }

    #[test]
    fn q_integer_clears_denominator() {
        let qmq = QScalar::from_laurent(LaurentPoly::q_minus_q_inv());
        for n in 0..=50u32 {
            let lhs = q_integer(n).mul(&qmq);
            let mut p = LaurentPoly::q_power(i64::from(n));
            p.add_term(-2 * i64::from(n), -Rational::one());
            assert_eq!(lhs, QScalar::from_laurent(p), "n = {n}");
        }
    }

    #[test]
    fn canonical_form_reduces() {
        // (q - q^{-1})^2 / (q - q^{-1})^3 -> 1/(q - q^{-1})
        let d = LaurentPoly::q_minus_q_inv();
        let s = QScalar::new(d.mul(&d), 3);
        assert_eq!(s, QScalar::inv_q_minus_q_inv_pow(1));
        assert!(s.is_canonical());
    }

    #[test]
    fn zero_canonical_form() {
        let z = QScalar::new(LaurentPoly::zero(), 5);
        assert_eq!(z.denom_pow(), 0);
        assert!(z.is_zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(QScalar::zero().to_string(), "0");
        assert_eq!(q_integer(2).to_string(), "q + q^{-1}");
        assert_eq!(QScalar::inv_q_minus_q_inv_pow(2).to_string(), "1/(q-q^{-1})^2");
        assert_eq!(QScalar::s_power(3).to_string(), "q^{3/2}");
    }

    #[test]
    fn json_golden_form() {
        // q + q^{-1} is not divisible by q - q^{-1}, so denom_pow 1 survives.
        let s = QScalar::new(q().add(&LaurentPoly::q_power(-1)), 1);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"num":[[-2,"1"],[2,"1"]],"denom_pow":1}"#);
        let back: QScalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(serde_json::from_str::<QScalar>(r#"{"num":[[0,"1/0"]],"denom_pow":0}"#).is_err());
        assert!(serde_json::from_str::<QScalar>(r#"{"num":[[0,"0"]],"denom_pow":0}"#).is_err());
        assert!(
            serde_json::from_str::<QScalar>(r#"{"num":[[2,"1"],[0,"1"]],"denom_pow":0}"#).is_err()
        );
    }

    fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec(((-6i64..6), (-9i64..9)), 0..5).prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (e, c) in terms {
                p.add_term(e, Rational::from_integer(BigInt::from(c)));
            }
            p
        })
    }

    fn scalar_strategy() -> impl Strategy<Value = QScalar> {
        (laurent_strategy(), 0u32..3).prop_map(|(p, k)| QScalar::new(p, k))
    }

    proptest! {
        #[test]
        fn add_associative(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        }

        #[test]
        fn mul_commutative(a in scalar_strategy(), b in scalar_strategy()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn mul_distributes(a in scalar_strategy(), b in scalar_strategy(), c in scalar_strategy()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn div_exact_inverts_mul(a in laurent_strategy(), d in laurent_strategy()) {
            prop_assume!(!d.is_zero());
            prop_assert_eq!(a.mul(&d).div_exact(&d).unwrap(), a);
        }

        #[test]
        fn results_stay_canonical(a in scalar_strategy(), b in scalar_strategy()) {
            prop_assert!(a.add(&b).is_canonical());
            prop_assert!(a.mul(&b).is_canonical());
            prop_assert!(a.sub(&b).is_canonical());
        }

        #[test]
        fn json_round_trip(a in scalar_strategy()) {
            let j = serde_json::to_string(&a).unwrap();
            let back: QScalar = serde_json::from_str(&j).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
