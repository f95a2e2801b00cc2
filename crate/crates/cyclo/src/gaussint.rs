//! Exact arithmetic substrate: Gaussian integers, Hermitian matrices, integer
//! characteristic polynomials, and Sturm-sequence root counting.
//!
//! Everything in this module is exact. Characteristic polynomials are computed
//! by the fraction-free Faddeev–LeVerrier recurrence over ℤ\[i\] (the divisions
//! it performs are provably exact and are checked); root counting uses Sturm
//! chains over ℚ whose endpoints may lie in ℚ(√2), with signs of a + b√2
//! decided by comparing a² against 2b². No floating point is used.
//!
//! The two spectral predicates that drive the rest of the crate live here:
//!
//! * [`HermMatrix::radius_class`] — the exact trichotomy ρ < 2, ρ = 2, ρ > 2;
//! * [`HermMatrix::min_eigen_exceeds`] — exact comparison of the least
//!   eigenvalue against a bound in ℚ(√2), used with −√2.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Gaussian integers
// ---------------------------------------------------------------------------

/// A Gaussian integer `re + im·i` with arbitrary-precision components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussInt {
    /// Real part.
    pub re: BigInt,
    /// Imaginary part.
    pub im: BigInt,
}

impl GaussInt {
    /// Build from big-integer parts.
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    /// Build from machine-integer parts.
    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussInt::new(BigInt::from(re), BigInt::from(im))
    }

    /// The zero element.
    pub fn zero() -> Self {
        GaussInt::from_i64(0, 0)
    }

    /// The unit 1.
    pub fn one() -> Self {
        GaussInt::from_i64(1, 0)
    }

    /// The unit i.
    pub fn i() -> Self {
        GaussInt::from_i64(0, 1)
    }

    /// True if this is 0.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// True if this is one of the four units 1, i, −1, −i.
    pub fn is_unit(&self) -> bool {
        self.norm_sqr() == BigInt::one()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -&self.im)
    }

    /// Squared absolute value `re² + im²`.
    pub fn norm_sqr(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Sum of two Gaussian integers.
    pub fn add(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    /// Difference of two Gaussian integers.
    pub fn sub(&self, rhs: &Self) -> Self {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    /// Product of two Gaussian integers.
    pub fn mul(&self, rhs: &Self) -> Self {
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        GaussInt::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_positive() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

/// A Gaussian rational `re + im·i` with exact rational components.
///
/// Used for exact elimination (ranks, LDL* factorizations) over ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRat {
    /// Real part.
    pub re: BigRational,
    /// Imaginary part.
    pub im: BigRational,
}

impl GaussRat {
    /// Build from rational parts.
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    /// The zero element.
    pub fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }

    /// Embed a Gaussian integer.
    pub fn from_gauss_int(z: &GaussInt) -> Self {
        GaussRat::new(
            BigRational::from_integer(z.re.clone()),
            BigRational::from_integer(z.im.clone()),
        )
    }

    /// Embed a rational number.
    pub fn from_rational(re: BigRational) -> Self {
        GaussRat::new(re, BigRational::zero())
    }

    /// True if this is 0.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    /// Squared absolute value.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Sum.
    pub fn add(&self, rhs: &Self) -> Self {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    /// Difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    /// Product.
    pub fn mul(&self, rhs: &Self) -> Self {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    /// Exact quotient. Panics on division by zero.
    pub fn div(&self, rhs: &Self) -> Self {
        let d = rhs.norm_sqr();
        assert!(!d.is_zero(), "division by zero in Q(i)");
        let num = self.mul(&rhs.conj());
        GaussRat::new(num.re / &d, num.im / &d)
    }

    /// Additive inverse.
    pub fn neg(&self) -> Self {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }

    /// The value as a Gaussian integer, or `None` if either part is not an
    /// integer.
    pub fn to_gauss_int(&self) -> Option<GaussInt> {
        if self.re.is_integer() && self.im.is_integer() {
            Some(GaussInt::new(self.re.to_integer(), self.im.to_integer()))
        } else {
            None
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_positive() {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

// ---------------------------------------------------------------------------
// ℚ(√2) endpoints
// ---------------------------------------------------------------------------

/// An element `a + b·√2` of ℚ(√2), used for exact interval endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadRat {
    /// Rational part.
    pub a: BigRational,
    /// Coefficient of √2.
    pub b: BigRational,
}

impl QuadRat {
    /// Build `a + b√2` from rational parts.
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadRat { a, b }
    }

    /// Embed a rational number.
    pub fn rational(a: BigRational) -> Self {
        QuadRat::new(a, BigRational::zero())
    }

    /// Embed an integer.
    pub fn integer(a: i64) -> Self {
        QuadRat::rational(BigRational::from_integer(BigInt::from(a)))
    }

    /// The constant √2.
    pub fn sqrt2() -> Self {
        QuadRat::new(BigRational::zero(), BigRational::one())
    }

    /// The constant −√2, the eigenvalue bound of the complete-graph criterion.
    pub fn neg_sqrt2() -> Self {
        QuadRat::new(BigRational::zero(), -BigRational::one())
    }

    /// True if this is 0.
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sum.
    pub fn add(&self, rhs: &Self) -> Self {
        QuadRat::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }

    /// Difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        QuadRat::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }

    /// Product: (a+b√2)(c+d√2) = ac+2bd + (ad+bc)√2.
    pub fn mul(&self, rhs: &Self) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        QuadRat::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }

    /// Exact sign: `Less`, `Equal` or `Greater` compared with 0.
    ///
    /// When a and b have opposite signs the sign is decided by comparing
    /// a² with 2b², which is exact in ℚ.
    pub fn sign(&self) -> Ordering {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            _ => {
                // a and b have strictly opposite signs; compare a² with 2b².
                let a2 = &self.a * &self.a;
                let b2 = BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b;
                match a2.cmp(&b2) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                }
            }
        }
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).sign()
    }
}

impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt(2)", self.b)
        } else {
            write!(f, "{} + {}*sqrt(2)", self.a, self.b)
        }
    }
}

fn rational_sign(x: &BigRational) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// An interval endpoint: −∞, a ℚ(√2) value, or +∞.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    /// −∞.
    NegInf,
    /// A finite endpoint in ℚ(√2).
    Finite(QuadRat),
    /// +∞.
    PosInf,
}

impl Bound {
    /// Convenience constructor for an integer endpoint.
    pub fn at(a: i64) -> Self {
        Bound::Finite(QuadRat::integer(a))
    }
}

// ---------------------------------------------------------------------------
// Integer polynomials
// ---------------------------------------------------------------------------

/// A polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored constant-term first. Characteristic polynomials are
/// monic by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Build from coefficients, constant term first. Trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(BigInt::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Build from machine integers, constant term first.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All coefficients, constant term first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient (panics on the zero polynomial).
    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// True if the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(BigInt::is_one).unwrap_or(false)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| BigInt::from(k) * c)
                .collect(),
        )
    }

    /// Evaluate at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Evaluate at a point of ℚ(√2).
    pub fn eval_quad(&self, x: &QuadRat) -> QuadRat {
        let mut acc = QuadRat::rational(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc
                .mul(x)
                .add(&QuadRat::rational(BigRational::from_integer(c.clone())));
        }
        acc
    }

    /// Divide out the content (gcd of coefficients); keeps the sign pattern.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        // g is non-negative and nonzero here, so dividing preserves signs.
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Product of two polynomials.
    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (j, a) in self.coeffs.iter().enumerate() {
            for (k, b) in rhs.coeffs.iter().enumerate() {
                out[j + k] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// The square-free part p / gcd(p, p′): same roots, all simple.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = int_poly_gcd(self, &self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_part();
        }
        let (q, r) = RatPoly::from_int(self).divrem(&RatPoly::from_int(&g));
        assert!(r.is_zero(), "gcd failed to divide its polynomial");
        q.to_primitive_int()
    }

    /// The multiplicity-graded factorization degree: deg(square-free part).
    ///
    /// A Hermitian characteristic polynomial has all roots real exactly when
    /// the Sturm count over (−∞, ∞) equals this number.
    pub fn distinct_root_capacity(&self) -> usize {
        self.squarefree_part().degree().unwrap_or(0)
    }

    /// Count distinct real roots in an interval with endpoints in
    /// ℚ(√2) ∪ {±∞}; `closed` selects inclusion of the (finite) endpoints.
    ///
    /// Constant polynomials (including zero) have no roots by convention.
    pub fn count_roots_in(&self, lo: &Bound, hi: &Bound, closed: (bool, bool)) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        // Empty or single-point intervals first.
        if let (Bound::Finite(a), Bound::Finite(b)) = (lo, hi) {
            match a.cmp(b) {
                Ordering::Greater => return 0,
                Ordering::Equal => {
                    return if closed.0 && closed.1 && self.eval_quad(a).is_zero() {
                        1
                    } else {
                        0
                    };
                }
                Ordering::Less => {}
            }
        }
        let sf = self.squarefree_part();
        let chain = SturmChain::new(&sf);
        // Sturm counts distinct roots in the half-open interval (lo, hi].
        let mut count = chain.variations(lo) - chain.variations(hi);
        if closed.0 {
            if let Bound::Finite(a) = lo {
                if self.eval_quad(a).is_zero() {
                    count += 1;
                }
            }
        }
        if !closed.1 {
            if let Bound::Finite(b) = hi {
                if self.eval_quad(b).is_zero() {
                    count -= 1;
                }
            }
        }
        count
    }

    /// Serialize as decimal coefficient strings, constant term first.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        if self.is_zero() {
            return vec!["0".to_owned()];
        }
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Parse from decimal coefficient strings, constant term first.
    pub fn from_coeff_strings(strings: &[String]) -> Result<IntPoly> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            let c: BigInt = s
                .parse()
                .map_err(|_| Error::InvalidFormat(format!("bad integer coefficient {s:?}")))?;
            coeffs.push(c);
        }
        Ok(IntPoly::new(coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_coeff_strings().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        IntPoly::from_coeff_strings(&strings).map_err(serde::de::Error::custom)
    }
}

/// Rational polynomials, internal helper for remainder sequences.
#[derive(Clone, Debug)]
struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn from_int(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().map(BigRational::is_zero).unwrap_or(false) {
            self.coeffs.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact polynomial division with remainder.
    fn divrem(&self, div: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let dd = div.degree().unwrap();
        let lead = div.coeffs[dd].clone();
        let mut rem = self.clone().trim();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let f = &rem.coeffs[rd] / &lead;
            quot[rd - dd] = f.clone();
            for k in 0..=dd {
                let delta = &div.coeffs[k] * &f;
                rem.coeffs[rd - dd + k] -= delta;
            }
            rem = rem.trim();
        }
        (RatPoly { coeffs: quot }.trim(), rem)
    }

    /// Scale by the positive rational that clears denominators and content.
    ///
    /// Multiplying a Sturm-chain element by a positive constant never changes
    /// sign variations, so this normalization is sound.
    fn to_primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().abs());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        IntPoly::new(ints).primitive_part()
    }
}

/// Primitive gcd of two integer polynomials (sign of the result unspecified).
fn int_poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut f = RatPoly::from_int(a);
    let mut g = RatPoly::from_int(b);
    if f.degree().unwrap_or(0) < g.degree().unwrap_or(0) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let (_, r) = f.divrem(&g);
        f = g;
        g = r;
    }
    f.to_primitive_int()
}

// ---------------------------------------------------------------------------
// Sturm chains
// ---------------------------------------------------------------------------

/// A Sturm chain of a square-free polynomial, normalized to primitive integer
/// polynomials (scaling by positive constants only, which preserves signs).
struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Build the chain p, p′, −rem(p, p′), … for square-free `p`.
    fn new(squarefree: &IntPoly) -> Self {
        let mut chain = vec![
            squarefree.primitive_part(),
            squarefree.derivative().primitive_part(),
        ];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = RatPoly::from_int(&chain[n - 2]).divrem(&RatPoly::from_int(&chain[n - 1]));
            if r.is_zero() {
                break;
            }
            let mut next = r.to_primitive_int();
            next = IntPoly::new(next.coeffs.iter().map(|c| -c).collect());
            chain.push(next);
        }
        SturmChain { chain }
    }

    /// Number of sign variations of the chain at an endpoint.
    fn variations(&self, at: &Bound) -> usize {
        let signs: Vec<Ordering> = self
            .chain
            .iter()
            .map(|p| match at {
                Bound::NegInf => sign_at_neg_inf(p),
                Bound::PosInf => sign_at_pos_inf(p),
                Bound::Finite(x) => p.eval_quad(x).sign(),
            })
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

fn sign_at_pos_inf(p: &IntPoly) -> Ordering {
    if p.is_zero() {
        Ordering::Equal
    } else if p.leading().is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn sign_at_neg_inf(p: &IntPoly) -> Ordering {
    let s = sign_at_pos_inf(p);
    if p.degree().unwrap_or(0) % 2 == 1 {
        s.reverse()
    } else {
        s
    }
}

// ---------------------------------------------------------------------------
// Radius classes and Hermitian matrices
// ---------------------------------------------------------------------------

/// Exact position of the spectral radius relative to 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum RadiusClass {
    /// All eigenvalues lie strictly inside (−2, 2).
    LessThan2,
    /// All eigenvalues lie in \[−2, 2\] and 2 or −2 is attained.
    Exactly2,
    /// Some eigenvalue lies outside \[−2, 2\].
    GreaterThan2,
}

impl fmt::Display for RadiusClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusClass::LessThan2 => write!(f, "LessThan2"),
            RadiusClass::Exactly2 => write!(f, "Exactly2"),
            RadiusClass::GreaterThan2 => write!(f, "GreaterThan2"),
        }
    }
}

/// Result of [`HermMatrix::displaced_rank`]: the rank of 2I − H over ℚ(i),
/// with a flag recording whether the positive-semidefiniteness precondition
/// (ρ(H) ≤ 2) actually held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisplacedRank {
    /// Rank of 2I − H over the Gaussian rationals.
    pub rank: usize,
    /// True when ρ(H) > 2, i.e. 2I − H is not positive semidefinite and the
    /// rank is reported outside the intended regime.
    pub exceeds_two: bool,
}

/// An n×n Hermitian matrix over the Gaussian integers.
///
/// Construction checks Hermitian symmetry (including real diagonal), so every
/// value of this type has a real spectrum. *Adjacency-class* matrices — zero
/// diagonal, entries in {0, ±1, ±i} — are the habitat of everything else in
/// this crate; [`HermMatrix::is_adjacency_class`] tests for that subclass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermMatrix {
    n: usize,
    entries: Vec<GaussInt>,
}

impl HermMatrix {
    /// Build from a row-major entry list of length n². Fails with
    /// [`Error::NonHermitian`] if the matrix is not Hermitian.
    pub fn new(n: usize, entries: Vec<GaussInt>) -> Result<Self> {
        assert_eq!(entries.len(), n * n, "entry list must have length n^2");
        for r in 0..n {
            for c in r..n {
                let a = &entries[r * n + c];
                let b = &entries[c * n + r];
                if *a != b.conj() {
                    return Err(Error::NonHermitian { row: r, col: c });
                }
            }
        }
        Ok(HermMatrix { n, entries })
    }

    /// Build from rows. Fails if the shape is ragged or the matrix is not
    /// Hermitian.
    pub fn from_rows(rows: Vec<Vec<GaussInt>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            assert_eq!(row.len(), n, "matrix rows must have length n");
            entries.extend(row.iter().cloned());
        }
        HermMatrix::new(n, entries)
    }

    /// Build from machine-integer (re, im) pairs; rows of length n.
    pub fn from_i64_rows(rows: &[Vec<(i64, i64)>]) -> Result<Self> {
        HermMatrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&(re, im)| GaussInt::from_i64(re, im)).collect())
                .collect(),
        )
    }

    /// The zero matrix of order n.
    pub fn zero(n: usize) -> Self {
        HermMatrix {
            n,
            entries: vec![GaussInt::zero(); n * n],
        }
    }

    /// Order of the matrix.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at (row, col).
    pub fn entry(&self, row: usize, col: usize) -> &GaussInt {
        &self.entries[row * self.n + col]
    }

    /// First entry violating the adjacency-class contract (zero diagonal,
    /// entries in {0, ±1, ±i}), if any.
    pub fn adjacency_class_violation(&self) -> Option<(usize, usize)> {
        for r in 0..self.n {
            for c in 0..self.n {
                let e = self.entry(r, c);
                if r == c {
                    if !e.is_zero() {
                        return Some((r, c));
                    }
                } else if !e.is_zero() && !e.is_unit() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// True when the matrix has zero diagonal and entries in {0, ±1, ±i}.
    pub fn is_adjacency_class(&self) -> bool {
        self.adjacency_class_violation().is_none()
    }

    /// Entrywise complex conjugate (equals the transpose for Hermitian input).
    pub fn conjugated(&self) -> HermMatrix {
        HermMatrix {
            n: self.n,
            entries: self.entries.iter().map(GaussInt::conj).collect(),
        }
    }

    /// Negation −H.
    pub fn negated(&self) -> HermMatrix {
        HermMatrix {
            n: self.n,
            entries: self.entries.iter().map(GaussInt::neg).collect(),
        }
    }

    /// Principal submatrix on the given vertex list (order preserved).
    ///
    /// The list must consist of distinct in-range indices.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<HermMatrix> {
        for (k, &v) in idx.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidVertexSet(format!(
                    "vertex {v} out of range for order {}",
                    self.n
                )));
            }
            if idx[..k].contains(&v) {
                return Err(Error::InvalidVertexSet(format!("vertex {v} repeated")));
            }
        }
        let m = idx.len();
        let mut entries = Vec::with_capacity(m * m);
        for &r in idx {
            for &c in idx {
                entries.push(self.entry(r, c).clone());
            }
        }
        Ok(HermMatrix { n: m, entries })
    }

    /// Exact characteristic polynomial det(xI − H), monic with integer
    /// coefficients, by the Faddeev–LeVerrier recurrence.
    ///
    /// The recurrence divides traces by 1..n; those divisions are exact for
    /// integer matrices and Hermitian-ness makes every coefficient a real
    /// integer. Both facts are asserted — a failure is an internal error.
    pub fn char_poly(&self) -> IntPoly {
        let n = self.n;
        if n == 0 {
            return IntPoly::from_i64s(&[1]);
        }
        // coeffs[k] = coefficient of x^k; coeffs[n] = 1.
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = self.entries.clone(); // M_1 = H
        let tr = trace(&m, n);
        assert!(tr.im.is_zero(), "trace of a Hermitian matrix must be real");
        coeffs[n - 1] = -tr.re;
        for k in 2..=n {
            // M_k = H · (M_{k−1} + c_{n−k+1} I)
            let c = coeffs[n - k + 1].clone();
            for d in 0..n {
                m[d * n + d].re += &c;
            }
            m = mat_mul(&self.entries, &m, n);
            let tr = trace(&m, n);
            assert!(tr.im.is_zero(), "characteristic polynomial coefficient is not real");
            let k_big = BigInt::from(k);
            let (q, r) = num_integer::div_rem(-tr.re, k_big);
            assert!(r.is_zero(), "characteristic polynomial coefficient is not integral");
            coeffs[n - k] = q;
        }
        IntPoly::new(coeffs)
    }

    /// Exact trichotomy of the spectral radius against 2.
    pub fn radius_class(&self) -> RadiusClass {
        let p = self.char_poly();
        if self.n == 0 {
            return RadiusClass::LessThan2;
        }
        let two = QuadRat::integer(2);
        let neg_two = QuadRat::integer(-2);
        let at_two = p.eval_quad(&two).is_zero();
        let at_neg_two = p.eval_quad(&neg_two).is_zero();
        let outside = p.count_roots_in(&Bound::NegInf, &Bound::Finite(neg_two), (false, false))
            + p.count_roots_in(&Bound::Finite(two), &Bound::PosInf, (false, false));
        if outside > 0 {
            RadiusClass::GreaterThan2
        } else if at_two || at_neg_two {
            RadiusClass::Exactly2
        } else {
            RadiusClass::LessThan2
        }
    }

    /// True exactly when every eigenvalue is strictly greater than `bound`.
    ///
    /// Used with bound = −√2 for the complete-graph criterion; the comparison
    /// is exact, so λ_min equal to the bound returns false.
    pub fn min_eigen_exceeds(&self, bound: &QuadRat) -> bool {
        if self.n == 0 {
            return true;
        }
        let p = self.char_poly();
        p.count_roots_in(&Bound::NegInf, &Bound::Finite(bound.clone()), (false, true)) == 0
    }

    /// Rank of 2I − H over the Gaussian rationals, by exact elimination.
    ///
    /// The intended regime is ρ(H) ≤ 2, where 2I − H is positive semidefinite
    /// and the rank is the dimension of the Gaussian root system attached to
    /// H. When ρ(H) > 2 the rank is still returned, flagged.
    pub fn displaced_rank(&self) -> DisplacedRank {
        let n = self.n;
        let two = BigRational::from_integer(BigInt::from(2));
        let mut m: Vec<GaussRat> = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut e = GaussRat::from_gauss_int(self.entry(r, c)).neg();
                if r == c {
                    e.re += &two;
                }
                m.push(e);
            }
        }
        let rank = gauss_rat_rank(&mut m, n, n);
        DisplacedRank {
            rank,
            exceeds_two: self.radius_class() == RadiusClass::GreaterThan2,
        }
    }
}

fn trace(m: &[GaussInt], n: usize) -> GaussInt {
    let mut t = GaussInt::zero();
    for d in 0..n {
        t = t.add(&m[d * n + d]);
    }
    t
}

fn mat_mul(a: &[GaussInt], b: &[GaussInt], n: usize) -> Vec<GaussInt> {
    let mut out = vec![GaussInt::zero(); n * n];
    for r in 0..n {
        for k in 0..n {
            let ark = &a[r * n + k];
            if ark.is_zero() {
                continue;
            }
            for c in 0..n {
                let prod = ark.mul(&b[k * n + c]);
                out[r * n + c] = out[r * n + c].add(&prod);
            }
        }
    }
    out
}

/// Row-echelon rank of a rows×cols Gaussian-rational matrix (in place).
pub(crate) fn gauss_rat_rank(m: &mut [GaussRat], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r * cols + c].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                m.swap(rank * cols + j, pivot * cols + j);
            }
        }
        let inv = m[rank * cols + c].clone();
        for r in rank + 1..rows {
            if m[r * cols + c].is_zero() {
                continue;
            }
            let f = m[r * cols + c].div(&inv);
            for j in c..cols {
                let delta = f.mul(&m[rank * cols + j]);
                m[r * cols + j] = m[r * cols + j].sub(&delta);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Shorthand: Hermitian matrix from (re, im) pairs.
    fn h(rows: &[Vec<(i64, i64)>]) -> HermMatrix {
        HermMatrix::from_i64_rows(rows).expect("test matrix must be Hermitian")
    }

    fn path(n: usize) -> HermMatrix {
        let mut rows = vec![vec![(0i64, 0i64); n]; n];
        for v in 0..n - 1 {
            rows[v][v + 1] = (1, 0);
            rows[v + 1][v] = (1, 0);
        }
        h(&rows)
    }

    fn complete(n: usize) -> HermMatrix {
        let mut rows = vec![vec![(1i64, 0i64); n]; n];
        for (v, row) in rows.iter_mut().enumerate() {
            row[v] = (0, 0);
        }
        h(&rows)
    }

    /// Independent characteristic-polynomial oracle: Leibniz expansion of
    /// det(xI − H) with polynomial entries. Exponential, for n ≤ 5 only.
    fn char_poly_leibniz(m: &HermMatrix) -> IntPoly {
        fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
            let mut out = Vec::new();
            let mut perm: Vec<usize> = (0..n).collect();
            fn rec(k: usize, perm: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
                let n = perm.len();
                if k == n {
                    out.push((perm.clone(), sign));
                    return;
                }
                for j in k..n {
                    perm.swap(k, j);
                    let s = if j == k { sign } else { -sign };
                    rec(k + 1, perm, s, out);
                    perm.swap(k, j);
                }
            }
            rec(0, &mut perm, 1, &mut out);
            out
        }

        // Polynomial with Gaussian-integer coefficients, constant first.
        type GPoly = Vec<GaussInt>;
        fn gmul(a: &GPoly, b: &GPoly) -> GPoly {
            let mut out = vec![GaussInt::zero(); a.len() + b.len() - 1];
            for (j, x) in a.iter().enumerate() {
                for (k, y) in b.iter().enumerate() {
                    out[j + k] = out[j + k].add(&x.mul(y));
                }
            }
            out
        }

        let n = m.n();
        let mut acc: Vec<GaussInt> = vec![GaussInt::zero(); n + 1];
        for (perm, sign) in permutations(n) {
            let mut term: GPoly = vec![GaussInt::from_i64(sign, 0)];
            for (r, &c) in perm.iter().enumerate() {
                let mut cell: GPoly = vec![m.entry(r, c).neg()];
                if r == c {
                    cell.push(GaussInt::one()); // x − H[r][r]
                }
                term = gmul(&term, &cell);
            }
            for (k, v) in term.into_iter().enumerate() {
                acc[k] = acc[k].add(&v);
            }
        }
        for v in &acc {
            assert!(v.im.is_zero());
        }
        IntPoly::new(acc.into_iter().map(|v| v.re).collect())
    }

    #[test]
    fn char_poly_path2_is_x2_minus_1() {
        let p2 = path(2);
        assert_eq!(p2.char_poly(), IntPoly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn char_poly_directed_triangle_is_x3_minus_3x() {
        // Directed 3-cycle 0→1→2→0.
        let d3 = h(&[
            vec![(0, 0), (0, 1), (0, -1)],
            vec![(0, -1), (0, 0), (0, 1)],
            vec![(0, 1), (0, -1), (0, 0)],
        ]);
        assert_eq!(d3.char_poly(), IntPoly::from_i64s(&[0, -3, 0, 1]));
        assert_eq!(d3.radius_class(), RadiusClass::LessThan2);
    }

    #[test]
    fn char_poly_quadrangle_is_x4_minus_4x2() {
        // Undirected 4-cycle.
        let c4 = h(&[
            vec![(0, 0), (1, 0), (0, 0), (1, 0)],
            vec![(1, 0), (0, 0), (1, 0), (0, 0)],
            vec![(0, 0), (1, 0), (0, 0), (1, 0)],
            vec![(1, 0), (0, 0), (1, 0), (0, 0)],
        ]);
        assert_eq!(c4.char_poly(), IntPoly::from_i64s(&[0, 0, -4, 0, 1]));
        assert_eq!(c4.radius_class(), RadiusClass::Exactly2);
    }

    #[test]
    fn radius_class_complete_graphs() {
        assert_eq!(complete(5).radius_class(), RadiusClass::GreaterThan2);
        // K3 has spectrum {2, −1, −1}.
        assert_eq!(complete(3).radius_class(), RadiusClass::Exactly2);
    }

    #[test]
    fn char_poly_matches_leibniz_oracle_small() {
        // A deterministic sweep of mixed matrices, incl. complex entries.
        let samples = vec![
            path(3),
            path(4),
            complete(4),
            h(&[
                vec![(0, 0), (0, 1), (1, 0), (0, 0)],
                vec![(0, -1), (0, 0), (0, -1), (1, 0)],
                vec![(1, 0), (0, 1), (0, 0), (0, 1)],
                vec![(0, 0), (1, 0), (0, -1), (0, 0)],
            ]),
            h(&[
                vec![(0, 0), (0, 1), (0, 0), (0, -1), (1, 0)],
                vec![(0, -1), (0, 0), (1, 0), (0, 0), (0, 0)],
                vec![(0, 0), (1, 0), (0, 0), (0, 1), (0, 0)],
                vec![(0, 1), (0, 0), (0, -1), (0, 0), (1, 0)],
                vec![(1, 0), (0, 0), (0, 0), (1, 0), (0, 0)],
            ]),
        ];
        for m in samples {
            assert_eq!(m.char_poly(), char_poly_leibniz(&m), "matrix {m:?}");
        }
    }

    #[test]
    fn count_roots_examples() {
        let p = IntPoly::from_i64s(&[-1, 0, 1]); // x²−1
        assert_eq!(p.count_roots_in(&Bound::at(-2), &Bound::at(2), (true, true)), 2);

        let q = IntPoly::from_i64s(&[0, 0, -4, 0, 1]); // x⁴−4x², roots −2,0,0,2
        assert_eq!(q.count_roots_in(&Bound::at(-2), &Bound::at(2), (true, true)), 3);
        assert_eq!(q.count_roots_in(&Bound::at(-2), &Bound::at(2), (false, false)), 1);

        // x³−3x has roots ±√3, 0; exactly one lies in (−∞, −√2].
        let r = IntPoly::from_i64s(&[0, -3, 0, 1]);
        assert_eq!(
            r.count_roots_in(
                &Bound::NegInf,
                &Bound::Finite(QuadRat::neg_sqrt2()),
                (false, true)
            ),
            1
        );
    }

    #[test]
    fn count_roots_degenerate_intervals() {
        let p = IntPoly::from_i64s(&[-1, 0, 1]);
        // Point interval at a root.
        assert_eq!(p.count_roots_in(&Bound::at(1), &Bound::at(1), (true, true)), 1);
        assert_eq!(p.count_roots_in(&Bound::at(1), &Bound::at(1), (true, false)), 0);
        // Reversed interval.
        assert_eq!(p.count_roots_in(&Bound::at(2), &Bound::at(-2), (true, true)), 0);
        // Whole line.
        assert_eq!(p.count_roots_in(&Bound::NegInf, &Bound::PosInf, (false, false)), 2);
    }

    #[test]
    fn squarefree_counts_distinct_roots() {
        // (x²−2)² = x⁴ −4x² +4: two distinct roots ±√2.
        let p = IntPoly::from_i64s(&[4, 0, -4, 0, 1]);
        assert_eq!(p.count_roots_in(&Bound::NegInf, &Bound::PosInf, (false, false)), 2);
        assert_eq!(p.distinct_root_capacity(), 2);
    }

    #[test]
    fn min_eigen_examples() {
        let bound = QuadRat::neg_sqrt2();
        // K4: least eigenvalue −1 > −√2.
        assert!(complete(4).min_eigen_exceeds(&bound));
        // P4: least eigenvalue −(1+√5)/2 < −√2.
        assert!(!path(4).min_eigen_exceeds(&bound));
        // C̃4 (quadrangle with one arc reversed): least eigenvalue −√2 exactly,
        // so strictness must exclude it.
        let ctilde4 = h(&[
            vec![(0, 0), (0, 1), (0, 0), (0, 1)],
            vec![(0, -1), (0, 0), (0, 1), (0, 0)],
            vec![(0, 0), (0, -1), (0, 0), (0, 1)],
            vec![(0, -1), (0, 0), (0, -1), (0, 0)],
        ]);
        assert_eq!(ctilde4.char_poly(), IntPoly::from_i64s(&[4, 0, -4, 0, 1]));
        assert!(!ctilde4.min_eigen_exceeds(&bound));
        // ... but every eigenvalue exceeds any bound strictly below −√2.
        let slack = QuadRat::new(
            BigRational::new(BigInt::from(-1), BigInt::from(100)),
            -BigRational::one(),
        );
        assert!(ctilde4.min_eigen_exceeds(&slack));
    }

    #[test]
    fn displaced_rank_of_paths_is_full() {
        for n in 1..=6 {
            let dr = path(n).displaced_rank();
            assert_eq!(dr.rank, n);
            assert!(!dr.exceeds_two);
        }
        // 1×1 zero matrix: 2I − 0 has rank 1.
        assert_eq!(HermMatrix::zero(1).displaced_rank().rank, 1);
        // C4 attains radius 2: rank drops by the multiplicity of eigenvalue 2.
        let c4 = h(&[
            vec![(0, 0), (1, 0), (0, 0), (1, 0)],
            vec![(1, 0), (0, 0), (1, 0), (0, 0)],
            vec![(0, 0), (1, 0), (0, 0), (1, 0)],
            vec![(1, 0), (0, 0), (1, 0), (0, 0)],
        ]);
        assert_eq!(c4.displaced_rank().rank, 3);
        // K5 has ρ = 4 > 2 and must be flagged.
        assert!(complete(5).displaced_rank().exceeds_two);
    }

    #[test]
    fn hermitian_construction_is_checked() {
        let bad = HermMatrix::from_i64_rows(&[
            vec![(0, 0), (0, 1)],
            vec![(0, 1), (0, 0)], // should be (0, −1)
        ]);
        assert!(matches!(bad, Err(Error::NonHermitian { row: 0, col: 1 })));
        let bad_diag = HermMatrix::from_i64_rows(&[vec![(0, 1)]]);
        assert!(matches!(bad_diag, Err(Error::NonHermitian { .. })));
    }

    #[test]
    fn adjacency_class_detection() {
        assert!(path(3).is_adjacency_class());
        let two = h(&[vec![(0, 0), (2, 0)], vec![(2, 0), (0, 0)]]);
        assert_eq!(two.adjacency_class_violation(), Some((0, 1)));
        // −1 entries are adjacency-class (signed graphs), though not digraphs.
        let minus = h(&[vec![(0, 0), (-1, 0)], vec![(-1, 0), (0, 0)]]);
        assert!(minus.is_adjacency_class());
    }

    #[test]
    fn quadrat_sign_logic() {
        let x = QuadRat::new(
            BigRational::from_integer(BigInt::from(3)),
            BigRational::from_integer(BigInt::from(-2)),
        ); // 3 − 2√2 ≈ 0.17 > 0
        assert_eq!(x.sign(), Ordering::Greater);
        let y = QuadRat::new(
            BigRational::from_integer(BigInt::from(-3)),
            BigRational::from_integer(BigInt::from(2)),
        );
        assert_eq!(y.sign(), Ordering::Less);
        let z = QuadRat::new(
            BigRational::from_integer(BigInt::from(1)),
            -BigRational::one(),
        ); // 1 − √2 < 0
        assert_eq!(z.sign(), Ordering::Less);
        assert_eq!(QuadRat::sqrt2().mul(&QuadRat::sqrt2()), QuadRat::integer(2));
    }

    #[test]
    fn poly_json_round_trip() {
        let p = IntPoly::from_i64s(&[0, -3, 0, 1]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["0","-3","0","1"]"#);
        let back: IntPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn radius_class_invariant_under_negation_and_conjugation() {
        let samples = vec![path(4), complete(4), complete(5)];
        for m in samples {
            let rc = m.radius_class();
            assert_eq!(m.negated().radius_class(), rc);
            assert_eq!(m.conjugated().radius_class(), rc);
        }
    }

    #[test]
    fn interlacing_on_principal_submatrices() {
        // Monotonicity used by the enumeration pruning: a principal submatrix
        // never has larger spectral radius class.
        let k5 = complete(5);
        let sub = k5.principal_submatrix(&[0, 2, 4]).unwrap();
        assert_eq!(sub.radius_class(), RadiusClass::Exactly2);
        let sub2 = k5.principal_submatrix(&[1, 3]).unwrap();
        assert_eq!(sub2.radius_class(), RadiusClass::LessThan2);
        assert!(k5.principal_submatrix(&[0, 0]).is_err());
        assert!(k5.principal_submatrix(&[9]).is_err());
    }
}
