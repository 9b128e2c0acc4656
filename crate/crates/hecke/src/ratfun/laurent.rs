//! Laurent polynomials in Z[p^{±1}, q^{±1}].
//!
//! Terms are kept in a `BTreeMap` keyed by the exponent pair `(a, b)` of the
//! monomial `p^a q^b`, ordered lexicographically (p before q). No stored
//! coefficient is ever zero and the zero polynomial is the empty map, so
//! structural equality is semantic equality.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent pair `(a, b)` of a monomial `p^a q^b`.
pub type Exp = (i32, i32);

/// A Laurent polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c.into())
    }

    /// The single term `c p^a q^b` (or zero if `c` is zero).
    pub fn monomial(a: i32, b: i32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        LaurentPoly { terms }
    }

    pub fn var_p() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn var_q() -> Self {
        Self::monomial(0, 1, 1)
    }

    /// Builds a polynomial from `(a, b, coeff)` triples, summing duplicates.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = LaurentPoly::zero();
        for (a, b, c) in iter {
            out.add_term((a, b), c.into());
        }
        out
    }

    fn add_term(&mut self, exp: Exp, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    /// True if the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: Exp) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Componentwise minimum of the exponents over all terms.
    pub fn min_exponents(&self) -> Option<Exp> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(a, b), &(c, d)| (a.min(c), b.min(d))))
    }

    /// Componentwise maximum of the exponents over all terms.
    pub fn max_exponents(&self) -> Option<Exp> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(a, b), &(c, d)| (a.max(c), b.max(d))))
    }

    /// Leading term under the lexicographic order (p before q).
    pub fn lex_leading(&self) -> Option<(Exp, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Multiplies by the unit monomial `p^da q^db`.
    pub fn shift(&self, da: i32, db: i32) -> Self {
        if da == 0 && db == 0 {
            return self.clone();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + da, b + db), c.clone()))
                .collect(),
        }
    }

    /// True if no exponent is negative (a genuine polynomial in p and q).
    pub fn is_genuine(&self) -> bool {
        self.min_exponents().map_or(true, |(a, b)| a >= 0 && b >= 0)
    }

    /// Gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d` exactly.
    pub fn div_content(&self, d: &BigInt) -> Self {
        assert!(!d.is_zero());
        if d.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| {
                    let (quo, rem) = c.div_rem(d);
                    assert!(rem.is_zero(), "inexact content division");
                    (e, quo)
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies an exponent substitution `p -> s_p p^{e_p}`, `q -> s_q q^{e_q}`
    /// where each image is a signed unit monomial. Used for the field
    /// automorphisms p -> -1/p and q -> -1/q.
    pub fn subst_signed_powers(&self, p_img: (i8, i32, i32), q_img: (i8, i32, i32)) -> Self {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            let sign_flips = (p_img.0 < 0 && a.rem_euclid(2) == 1)
                ^ (q_img.0 < 0 && b.rem_euclid(2) == 1);
            let exp = (
                a * p_img.1 + b * q_img.1,
                a * p_img.2 + b * q_img.2,
            );
            let coeff = if sign_flips { -c.clone() } else { c.clone() };
            out.add_term(exp, coeff);
        }
        out
    }

    /// The automorphism fixing q and sending p to -p^{-1}.
    pub fn alpha_p(&self) -> Self {
        self.subst_signed_powers((-1, -1, 0), (1, 0, 1))
    }

    /// The automorphism fixing p and sending q to -q^{-1}.
    pub fn alpha_q(&self) -> Self {
        self.subst_signed_powers((1, 1, 0), (-1, 0, -1))
    }

    /// Exact evaluation at rational `p0`, `q0` (both nonzero if negative
    /// exponents occur).
    pub fn evaluate(&self, p0: &BigRational, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            let term = rational_pow(p0, a) * rational_pow(q0, b) * BigRational::from(c.clone());
            acc += term;
        }
        acc
    }

    /// Exact Laurent division: returns `self / rhs` when the quotient is
    /// again a Laurent polynomial, `None` otherwise.
    pub fn div_exact(&self, rhs: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Unit monomials divide everything.
        if rhs.is_monomial() {
            let (&(a, b), c) = rhs.terms.iter().next().unwrap();
            let mut out = LaurentPoly::zero();
            for (&(x, y), v) in &self.terms {
                let (quo, rem) = v.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                out.add_term((x - a, y - b), quo);
            }
            return Some(out);
        }
        let smin = self.min_exponents().unwrap();
        let rmin = rhs.min_exponents().unwrap();
        let f = self.shift(-smin.0, -smin.1);
        let g = rhs.shift(-rmin.0, -rmin.1);
        let q = poly_div_exact(&f, &g)?;
        Some(q.shift(smin.0 - rmin.0, smin.1 - rmin.1))
    }

    /// Primitive gcd: a genuine polynomial with minimal exponents zero,
    /// content one and positive lex-leading coefficient. Unit monomial
    /// factors are treated as units (they never appear in the gcd).
    pub fn gcd(&self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return normalize_assoc(rhs);
        }
        if rhs.is_zero() {
            return normalize_assoc(self);
        }
        let a = genuine_primitive(self);
        let b = genuine_primitive(rhs);
        if a.is_one() || b.is_one() {
            return LaurentPoly::one();
        }
        let g = BivPoly::from_laurent(&a).gcd(&BivPoly::from_laurent(&b));
        normalize_assoc(&g.to_laurent())
    }
}

/// Normalizes to the canonical associate: shifted to minimal exponents zero,
/// content one, positive lex-leading coefficient. Zero maps to zero.
fn normalize_assoc(f: &LaurentPoly) -> LaurentPoly {
    if f.is_zero() {
        return LaurentPoly::zero();
    }
    let g = genuine_primitive(f);
    if g.lex_leading().unwrap().1.is_negative() {
        -&g
    } else {
        g
    }
}

/// Shifts to minimal exponents zero and strips the integer content.
fn genuine_primitive(f: &LaurentPoly) -> LaurentPoly {
    let (a, b) = f.min_exponents().unwrap();
    let shifted = f.shift(-a, -b);
    let c = shifted.content();
    shifted.div_content(&c)
}

fn rational_pow(x: &BigRational, n: i32) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    let positive = if n > 0 {
        x.clone()
    } else {
        assert!(!x.is_zero(), "negative power of zero");
        x.recip()
    };
    let mut acc = BigRational::one();
    for _ in 0..n.unsigned_abs() {
        acc *= &positive;
    }
    acc
}

/// Exact division of genuine polynomials by lex-leading cancellation.
fn poly_div_exact(f: &LaurentPoly, g: &LaurentPoly) -> Option<LaurentPoly> {
    let mut rem = f.clone();
    let mut quo = LaurentPoly::zero();
    let ((ga, gb), gc) = g.lex_leading().unwrap();
    let gc = gc.clone();
    while !rem.is_zero() {
        let ((ra, rb), rc) = rem.lex_leading().unwrap();
        let (c, r) = rc.div_rem(&gc);
        if !r.is_zero() {
            return None;
        }
        let (da, db) = (ra - ga, rb - gb);
        let t = LaurentPoly::monomial(da, db, c);
        rem = &rem - &(&t * g);
        quo = &quo + &t;
        // Exact division strictly decreases the lex-leading term; if the new
        // leading term is not below the old one the division cannot be exact.
        if let Some(((na, nb), _)) = rem.lex_leading() {
            if (na, nb) >= (ra, rb) {
                return None;
            }
        }
    }
    Some(quo)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Debug for LaurentPoly {
    fmt::Display::fmt is not derivable here; Debug prints the display form.
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Display from lex-largest term down.
        for (&(a, b), c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_power = a == 0 && b == 0;
            if !mag.is_one() || unit_power {
                write!(f, "{}", mag)?;
                if !unit_power {
                    write!(f, "*")?;
                }
            }
            match (a, b) {
                (0, 0) => {}
                (a, 0) => write_var(f, 'p', a)?,
                (0, b) => write_var(f, 'q', b)?,
                (a, b) => {
                    write_var(f, 'p', a)?;
                    write!(f, "*")?;
                    write_var(f, 'q', b)?;
                }
            }
        }
        Ok(())
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, v: char, e: i32) -> fmt::Result {
    if e == 1 {
        write!(f, "{v}")
    } else {
        write!(f, "{v}^{e}")
    }
}

// ---------------------------------------------------------------------------
// Dense bivariate machinery backing the gcd.
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over Z in the variable p.
#[derive(Clone, PartialEq, Eq, Debug)]
struct UniPoly {
    // coeffs[i] is the coefficient of p^i; trailing zeros trimmed.
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let c = self.content();
        self.div_content(&c)
    }

    fn div_content(&self, d: &BigInt) -> UniPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    fn mul(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    fn mul_scalar(&self, c: &BigInt) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    fn sub(&self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        UniPoly::from_coeffs(out)
    }

    /// Pseudo-remainder of `self` by `rhs` (primitive PRS step).
    fn pseudo_rem(&self, rhs: &UniPoly) -> UniPoly {
        let mut rem = self.clone();
        let d = rhs.degree();
        let lc = rhs.lc().clone();
        while !rem.is_zero() && rem.degree() >= d {
            let shift = rem.degree() - d;
            let coef = rem.lc().clone();
            // lc(rhs) * rem - coef * x^shift * rhs
            let mut shifted = vec![BigInt::zero(); shift];
            shifted.extend(rhs.coeffs.iter().map(|c| c * &coef));
            rem = rem.mul_scalar(&lc).sub(&UniPoly::from_coeffs(shifted));
        }
        rem
    }

    /// Primitive gcd via the primitive pseudo-remainder sequence.
    fn gcd(&self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return rhs.primitive();
        }
        if rhs.is_zero() {
            return self.primitive();
        }
        let c = self.content().gcd(&rhs.content());
        let mut a = self.primitive();
        let mut b = rhs.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        let mut g = a.mul_scalar(&c);
        if g.lc().is_negative() {
            g = g.mul_scalar(&BigInt::from(-1));
        }
        g
    }

    fn div_exact(&self, rhs: &UniPoly) -> Option<UniPoly> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        if self.degree() < rhs.degree() {
            return None;
        }
        let mut rem = self.clone();
        let mut quo = vec![BigInt::zero(); self.degree() - rhs.degree() + 1];
        let d = rhs.degree();
        while !rem.is_zero() && rem.degree() >= d {
            let shift = rem.degree() - d;
            let (c, r) = rem.lc().div_rem(rhs.lc());
            if r.is_zero() == false {
                return None;
            }
            quo[shift] = c.clone();
            let mut shifted = vec![BigInt::zero(); shift];
            shifted.extend(rhs.coeffs.iter().map(|x| x * &c));
            rem = rem.sub(&UniPoly::from_coeffs(shifted));
            if !rem.is_zero() && rem.degree() >= d + shift && shift > 0 {
                return None;
            }
        }
        if rem.is_zero() {
            Some(UniPoly::from_coeffs(quo))
        } else {
            None
        }
    }
}

/// Dense polynomial in q with coefficients in Z[p].
#[derive(Clone, Debug)]
struct BivPoly {
    // coeffs[j] is the coefficient (in Z[p]) of q^j; trailing zeros trimmed.
    coeffs: Vec<UniPoly>,
}

impl BivPoly {
    fn from_laurent(f: &LaurentPoly) -> Self {
        assert!(f.is_genuine());
        let (amax, bmax) = f.max_exponents().unwrap_or((0, 0));
        let mut coeffs = vec![vec![BigInt::zero(); amax as usize + 1]; bmax as usize + 1];
        for (&(a, b), c) in f.terms() {
            coeffs[b as usize][a as usize] = c.clone();
        }
        BivPoly {
            coeffs: {
                let mut v: Vec<UniPoly> = coeffs.into_iter().map(UniPoly::from_coeffs).collect();
                while v.last().map_or(false, UniPoly::is_zero) {
                    v.pop();
                }
                v
            },
        }
    }

    fn to_laurent(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (b, up) in self.coeffs.iter().enumerate() {
            for (a, c) in up.coeffs.iter().enumerate() {
                out.add_term((a as i32, b as i32), c.clone());
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree_q(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lc_q(&self) -> &UniPoly {
        self.coeffs.last().expect("leading coefficient of zero")
    }

    /// Gcd in Z[p] of all q-coefficients.
    fn content_q(&self) -> UniPoly {
        let mut g = UniPoly::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    fn div_content_q(&self, d: &UniPoly) -> BivPoly {
        BivPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.div_exact(d).expect("inexact q-content division"))
                .collect(),
        }
    }

    fn primitive_q(&self) -> BivPoly {
        if self.is_zero() {
            return BivPoly { coeffs: vec![] };
        }
        let c = self.content_q();
        self.div_content_q(&c)
    }

    fn mul_coef(&self, c: &UniPoly) -> BivPoly {
        BivPoly {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    fn sub(&self, rhs: &BivPoly) -> BivPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![UniPoly::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] = out[i].sub(c);
        }
        while out.last().map_or(false, UniPoly::is_zero) {
            out.pop();
        }
        BivPoly { coeffs: out }
    }

    fn pseudo_rem(&self, rhs: &BivPoly) -> BivPoly {
        let mut rem = self.clone();
        let d = rhs.degree_q();
        let lc = rhs.lc_q().clone();
        while !rem.is_zero() && rem.degree_q() >= d {
            let shift = rem.degree_q() - d;
            let coef = rem.lc_q().clone();
            let mut shifted = vec![UniPoly::zero(); shift];
            shifted.extend(rhs.coeffs.iter().map(|c| c.mul(&coef)));
            rem = rem.mul_coef(&lc).sub(&BivPoly { coeffs: shifted });
        }
        rem
    }

    /// Primitive bivariate gcd: primitive PRS in q over Z[p], with the
    /// q-contents handled by the univariate gcd.
    fn gcd(&self, rhs: &BivPoly) -> BivPoly {
        let ca = self.content_q();
        let cb = rhs.content_q();
        let c = ca.gcd(&cb);
        let mut a = self.primitive_q();
        let mut b = rhs.primitive_q();
        if a.degree_q() < b.degree_q() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_q();
            a = b;
            b = r;
        }
        a.primitive_q().mul_coef(&c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> LaurentPoly {
        LaurentPoly::var_p()
    }

    #[test]
    fn monomial_product() {
        assert_eq!(&p() * &p(), LaurentPoly::monomial(2, 0, 1));
    }

    #[test]
    fn bracket_product_by_hand() {
        // (p + p^-1)(p - p^-1) expanded by hand: p^2 - p^-2.
        let two = LaurentPoly::from_terms([(1, 0, 1), (-1, 0, 1)]);
        let zero_bracket = LaurentPoly::from_terms([(1, 0, 1), (-1, 0, -1)]);
        let expected = LaurentPoly::from_terms([(2, 0, 1), (-2, 0, -1)]);
        assert_eq!(&two * &zero_bracket, expected);
    }

    #[test]
    fn additive_identity() {
        let x = LaurentPoly::from_terms([(3, -2, 5), (0, 1, -7)]);
        assert_eq!(&x + &LaurentPoly::zero(), x);
    }

    #[test]
    fn gcd_of_shifted_squares() {
        // gcd(p^2 + 2 + p^-2, p + p^-1) is p^2 + 1 up to units.
        let sq = LaurentPoly::from_terms([(2, 0, 1), (0, 0, 2), (-2, 0, 1)]);
        let two = LaurentPoly::from_terms([(1, 0, 1), (-1, 0, 1)]);
        let g = sq.gcd(&two);
        assert_eq!(g, LaurentPoly::from_terms([(2, 0, 1), (0, 0, 1)]));
    }

    #[test]
    fn exact_division_roundtrip() {
        let f = LaurentPoly::from_terms([(1, 2, 3), (-1, 0, 4), (0, -1, -2)]);
        let g = LaurentPoly::from_terms([(2, 1, 1), (0, 0, 5), (-1, -1, -1)]);
        let prod = &f * &g;
        assert_eq!(prod.div_exact(&g).unwrap(), f);
        assert_eq!(prod.div_exact(&f).unwrap(), g);
        let not_multiple = &prod + &LaurentPoly::one();
        assert!(not_multiple.div_exact(&g).is_none());
    }

    #[test]
    fn automorphisms_are_involutions() {
        let f = LaurentPoly::from_terms([(1, 1, 1), (-2, 3, -4), (0, 0, 7)]);
        assert_eq!(f.alpha_p().alpha_p(), f);
        assert_eq!(f.alpha_q().alpha_q(), f);
        // alpha_p(p) = -p^{-1}
        assert_eq!(p().alpha_p(), LaurentPoly::monomial(-1, 0, -1));
    }
}
