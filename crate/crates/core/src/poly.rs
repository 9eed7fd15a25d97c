//! Sparse Laurent polynomials with integer coefficients in one variable.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

/// `sum c_e * A^e` stored as exponent -> nonzero coefficient.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `coeff * A^exp`.
    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(coeff, exp);
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(c, e);
        }
        p
    }

    /// The loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        LaurentPoly::from_terms([(2, -1), (-2, -1)])
    }

    pub fn add_term(&mut self, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `coeff * A^exp`.
    pub fn scale(&self, coeff: i64, exp: i32) -> Self {
        if coeff == 0 {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + exp, c * coeff)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Substitutes `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Substitutes `A -> A^k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, &c)| (e * k, c)))
    }

    /// Rewrites in `t = A^-4` when every exponent is a multiple of four.
    pub fn to_t(&self) -> Option<Self> {
        if self.terms.keys().any(|e| e % 4 != 0) {
            return None;
        }
        Some(LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (-e / 4, c)).collect() })
    }

    /// Inverse of [`LaurentPoly::to_t`].
    pub fn from_t(&self) -> Self {
        self.substitute_power(-4)
    }

    /// Representative of the class `{ ±A^k * self }`: lowest exponent zero,
    /// lowest coefficient positive.
    pub fn normalize_unit(&self) -> Self {
        match self.terms.iter().next() {
            None => LaurentPoly::zero(),
            Some((&e, &c)) => self.scale(c.signum(), -e),
        }
    }

    /// Value at `A = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(c, e);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1, 0)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1, 0)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl LaurentPoly {
    /// Displays with `var` as the variable name, e.g. `t` for a Jones
    /// polynomial after [`LaurentPoly::to_t`].
    pub fn display_in(&self, var: &'static str) -> DisplayIn<'_> {
        DisplayIn { poly: self, var }
    }
}

/// See [`LaurentPoly::display_in`].
pub struct DisplayIn<'a> {
    poly: &'a LaurentPoly,
    var: &'static str,
}

impl fmt::Display for DisplayIn<'_> {
    /// Descending exponents, e.g. `-A^5 - A^-3 + A^-7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var;
        if self.poly.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, &c)) in self.poly.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.unsigned_abs();
            match (mag, e) {
                (_, 0) => write!(f, "{mag}")?,
                (1, 1) => f.write_str(v)?,
                (1, _) => write!(f, "{v}^{e}")?,
                (_, 1) => write!(f, "{mag}{v}")?,
                _ => write!(f, "{mag}{v}^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in("A").fmt(f)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Dense accumulator used by the state sums: counts of states by
/// `(number of B-smoothings, number of loops)`.
#[derive(Clone, Debug, Default)]
pub(crate) struct StateHistogram {
    crossings: usize,
    // counts[b * stride + loops]
    counts: Vec<u64>,
    stride: usize,
}

impl StateHistogram {
    pub(crate) fn new(crossings: usize, max_loops: usize) -> Self {
        let stride = max_loops + 1;
        StateHistogram { crossings, counts: alloc::vec![0; (crossings + 1) * stride], stride }
    }

    #[inline]
    pub(crate) fn record(&mut self, b_smoothings: usize, loops: usize) {
        self.counts[b_smoothings * self.stride + loops] += 1;
    }

    /// `sum count * A^(a - b) * delta^(loops - 1)`.
    pub(crate) fn to_poly(&self) -> LaurentPoly {
        let delta = LaurentPoly::delta();
        let mut powers: Vec<LaurentPoly> = Vec::with_capacity(self.stride);
        let mut acc = LaurentPoly::one();
        for _ in 0..self.stride {
            powers.push(acc.clone());
            acc = &acc * &delta;
        }
        let mut out = LaurentPoly::zero();
        for b in 0..=self.crossings {
            for loops in 1..self.stride {
                let count = self.counts[b * self.stride + loops];
                if count != 0 {
                    let shift = self.crossings as i32 - 2 * b as i32;
                    out += &powers[loops - 1].scale(count as i64, shift);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-8i32..8, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    #[test]
    fn no_zero_terms() {
        let mut p = LaurentPoly::monomial(3, 2);
        p.add_term(-3, 2);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
        assert_eq!(LaurentPoly::from_terms([(1, 0)]).term_count(), 0);
    }

    #[test]
    fn delta_squared() {
        let d2 = LaurentPoly::delta().pow(2);
        assert_eq!(d2, LaurentPoly::from_terms([(4, 1), (0, 2), (-4, 1)]));
        assert_eq!(LaurentPoly::delta().to_string(), "-A^2 - A^-2");
    }

    #[test]
    fn t_conversion() {
        let p = LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)]);
        let t = p.to_t().unwrap();
        assert_eq!(t, LaurentPoly::from_terms([(1, 1), (3, 1), (4, -1)]));
        assert_eq!(t.from_t(), p);
        assert!(LaurentPoly::delta().to_t().is_none());
    }

    #[test]
    fn unit_normalization() {
        let p = LaurentPoly::from_terms([(-3, -2), (5, 1)]);
        assert_eq!(p.normalize_unit(), LaurentPoly::from_terms([(0, 2), (8, -1)]));
        assert_eq!(p.scale(-1, 7).normalize_unit(), p.normalize_unit());
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
            prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
        }
    }
}
