//! Exact nonnegativity certification on `[-1, 1]` by Sturm-sequence root
//! counting.
//!
//! The pipeline: take the square-free part of the subject polynomial, build its
//! Sturm chain, isolate every distinct real root near the certification
//! interval into disjoint rational intervals, then evaluate the *original*
//! polynomial exactly at rational points strictly between consecutive roots and
//! at the interval endpoints. If every sampled value and both endpoint values
//! are nonnegative the polynomial is nonnegative on the whole closed interval:
//! between consecutive roots the sign is constant, and sampling the original
//! polynomial (not its square-free part) makes even-multiplicity touching roots
//! certify correctly.
//!
//! Everything here runs in exact arithmetic. Sign evaluations go through
//! integer polynomials (denominators cleared, content removed) so that no
//! rational normalization happens in inner loops; Sturm remainders are rescaled
//! to primitive integer form after every step, which preserves the sign
//! structure.
//!
//! Endpoints of the certification interval are routinely roots of the
//! polynomials certified here, and Sturm's theorem needs non-root endpoints.
//! Root counting therefore nudges the evaluation points *outward* in
//! deterministic rational steps of `1/1024` until they are off every root; the
//! closed endpoints themselves are handled by direct exact evaluation.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::legendre::{gap_polynomial, total_gap_polynomial, Dimension};
use crate::{Error, Poly, Rational};

// ---------------------------------------------------------------------------
// Integer polynomial helpers (private)
// ---------------------------------------------------------------------------

/// Integer polynomial, ascending coefficients, trimmed. Positively proportional
/// to the rational polynomial it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial.
    fn degree(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    /// Clears denominators (positive multiplier) and removes integer content.
    fn from_rational(p: &Poly) -> Self {
        let mut l = BigInt::one();
        for c in p.coeffs() {
            l = l.lcm(c.denom());
        }
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        Self::new(coeffs).into_primitive()
    }

    fn to_rational(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Divides out the positive content (gcd of coefficients).
    fn into_primitive(mut self) -> Self {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                return self;
            }
        }
        if g.is_zero() || g.is_one() {
            return self;
        }
        for c in &mut self.coeffs {
            *c = &*c / &g;
        }
        self
    }

    fn negated(mut self) -> Self {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }

    fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i as u64 + 1))
                .collect(),
        )
    }

    /// Pseudo-remainder, normalized to be positively proportional to the true
    /// Euclidean remainder `rem(self, div)`.
    fn signed_prem(&self, div: &Self) -> Self {
        debug_assert!(!div.is_zero());
        let lead = div.coeffs.last().unwrap().clone();
        let dn = div.coeffs.len();
        let mut r = self.coeffs.clone();
        let mut lead_negations = 0usize;
        while r.len() >= dn {
            if r.last().is_none_or(|c| c.is_zero()) {
                r.pop();
                continue;
            }
            let s = r.last().unwrap().clone();
            let shift = r.len() - dn;
            // r <- lead·r - s·x^shift·div; the top coefficient cancels.
            for c in r.iter_mut() {
                *c = &*c * &lead;
            }
            for (i, dc) in div.coeffs.iter().enumerate() {
                r[shift + i] -= &s * dc;
            }
            debug_assert!(r.last().unwrap().is_zero());
            r.pop();
            if lead.sign() == Sign::Minus {
                lead_negations += 1;
            }
        }
        // r = lead^j · rem(self, div); flip if lead^j < 0 so the result is
        // positively proportional to the remainder.
        let out = Self::new(r);
        if lead_negations % 2 == 1 {
            out.negated()
        } else {
            out
        }
    }

    /// Sign of the value at `num/den`, using shared power tables
    /// (`num_pows[i] = num^i`, `den_pows[i] = den^i`, sized past the degree).
    fn sign_at_with_tables(&self, num_pows: &[BigInt], den_pows: &[BigInt]) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let deg = self.degree();
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * &num_pows[i] * &den_pows[deg - i];
        }
        match acc.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Sign of the value at a rational point.
    fn sign_at(&self, x: &Rational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let (np, dp) = power_tables(x, self.degree());
        self.sign_at_with_tables(&np, &dp)
    }
}

fn power_tables(x: &Rational, max_deg: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut np = Vec::with_capacity(max_deg + 1);
    let mut dp = Vec::with_capacity(max_deg + 1);
    np.push(BigInt::one());
    dp.push(BigInt::one());
    for i in 0..max_deg {
        np.push(&np[i] * x.numer());
        dp.push(&dp[i] * x.denom());
    }
    (np, dp)
}

/// Primitive gcd in `Z[x]`, positive leading coefficient.
fn int_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut r0 = a.clone().into_primitive();
    let mut r1 = b.clone().into_primitive();
    if r0.is_zero() {
        return normalize_positive(r1);
    }
    while !r1.is_zero() {
        let r2 = if r0.degree() >= r1.degree() {
            r0.signed_prem(&r1).into_primitive()
        } else {
            std::mem::replace(&mut r0, IntPoly::zero())
        };
        r0 = std::mem::replace(&mut r1, r2);
    }
    normalize_positive(r0)
}

fn normalize_positive(p: IntPoly) -> IntPoly {
    if p.coeffs.last().is_some_and(|c| c.sign() == Sign::Minus) {
        p.negated()
    } else {
        p
    }
}

// ---------------------------------------------------------------------------
// Square-free part and Sturm chains
// ---------------------------------------------------------------------------

/// Square-free part `p / gcd(p, p')`, rescaled by a positive rational so the
/// leading coefficient has absolute value 1.
///
/// Shares the distinct real roots of `p`, each with multiplicity one. Rejects
/// the zero polynomial.
pub fn square_free(p: &Poly) -> Result<Poly, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Poly::one());
    }
    let pi = IntPoly::from_rational(p);
    let g = int_gcd(&pi, &pi.derivative());
    let (q, r) = pi
        .to_rational()
        .div_rem(&g.to_rational())
        .expect("gcd of a nonzero polynomial is nonzero");
    assert!(r.is_zero(), "square-free division left a remainder");
    let lead = q
        .leading()
        .expect("quotient of nonzero by divisor is nonzero");
    let scale = Rational::one() / lead.abs();
    Ok(q.scaled(&scale))
}

/// Sturm chain `p_0 = p`, `p_1 = p'`, `p_{i+1} = -rem(p_{i-1}, p_i)`, each
/// element rescaled to primitive integer form (a positive rescaling, which
/// leaves sign variations unchanged).
///
/// For a square-free input the chain ends in a nonzero constant, and the number
/// of distinct real roots in `(a, b]` equals the sign-variation count at `a`
/// minus the count at `b`.
#[derive(Debug, Clone)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

/// Builds the Sturm chain of `p`. Expects a square-free, nonzero input (the
/// output of [`square_free`]); rejects the zero polynomial.
pub fn sturm_chain(p: &Poly) -> Result<SturmChain, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p0 = IntPoly::from_rational(p);
    let mut polys = vec![p0];
    let p1 = polys[0].derivative().into_primitive();
    if p1.is_zero() {
        return Ok(SturmChain { polys });
    }
    polys.push(p1);
    loop {
        let prev = &polys[polys.len() - 2];
        let curr = &polys[polys.len() - 1];
        if curr.degree() == 0 {
            break;
        }
        let next = prev.signed_prem(curr).negated().into_primitive();
        if next.is_zero() {
            break;
        }
        polys.push(next);
    }
    Ok(SturmChain { polys })
}

impl SturmChain {
    /// The chain as rational polynomials (each positively proportional to the
    /// canonical remainder-sequence element).
    pub fn polys(&self) -> Vec<Poly> {
        self.polys.iter().map(IntPoly::to_rational).collect()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Number of sign variations of the chain at `x` (zeros skipped).
    pub fn variations_at(&self, x: &Rational) -> usize {
        let max_deg = self.polys[0].degree();
        let (np, dp) = power_tables(x, max_deg);
        let mut variations = 0;
        let mut last: i8 = 0;
        for p in &self.polys {
            let s = p.sign_at_with_tables(&np, &dp);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                variations += 1;
            }
            last = s;
        }
        variations
    }

    fn lead_sign_at(&self, x: &Rational) -> i8 {
        self.polys[0].sign_at(x)
    }
}

const NUDGE_DENOM: i64 = 1024;
const MAX_NUDGES: i64 = 4096;

fn nudge_step() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(NUDGE_DENOM))
}

/// Largest point `< x` of the form `x - k/1024` that is not a root of `q`.
fn nudge_down(q: &IntPoly, x: &Rational) -> Result<Rational, Error> {
    let step = nudge_step();
    let mut cand = x - &step;
    for _ in 0..MAX_NUDGES {
        if q.sign_at(&cand) != 0 {
            return Ok(cand);
        }
        cand -= &step;
    }
    Err(Error::NudgeFailed(x.to_string()))
}

/// Smallest point `> x` of the form `x + k/1024` that is not a root of `q`.
fn nudge_up(q: &IntPoly, x: &Rational) -> Result<Rational, Error> {
    let step = nudge_step();
    let mut cand = x + &step;
    for _ in 0..MAX_NUDGES {
        if q.sign_at(&cand) != 0 {
            return Ok(cand);
        }
        cand += &step;
    }
    Err(Error::NudgeFailed(x.to_string()))
}

/// Exact count of distinct real roots of the chain's polynomial in `(a, b]`.
///
/// If `a` or `b` is itself a root of the polynomial the evaluation point is
/// nudged outward (downward at `a`, upward at `b`) in steps of `1/1024` until
/// it is off every root, so endpoint roots are included in the count.
pub fn count_roots(chain: &SturmChain, a: &Rational, b: &Rational) -> Result<usize, Error> {
    if a >= b {
        return Err(Error::EmptyInterval);
    }
    let q = &chain.polys[0];
    let lo = if chain.lead_sign_at(a) == 0 {
        nudge_down(q, a)?
    } else {
        a.clone()
    };
    let hi = if chain.lead_sign_at(b) == 0 {
        nudge_up(q, b)?
    } else {
        b.clone()
    };
    let va = chain.variations_at(&lo);
    let vb = chain.variations_at(&hi);
    debug_assert!(va >= vb, "sign variations must not increase left to right");
    Ok(va.saturating_sub(vb))
}

// ---------------------------------------------------------------------------
// Root isolation (private)
// ---------------------------------------------------------------------------

/// Width bound for isolating intervals: 1/2^16.
fn isolation_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(1i64 << 16))
}

fn half(x: &Rational, y: &Rational) -> Rational {
    (x + y) / Rational::from_integer(BigInt::from(2))
}

/// A point strictly inside `(lo, hi)` that is not a root of `q`: the midpoint,
/// or a deterministic dyadic perturbation of it.
fn splitter(q: &IntPoly, lo: &Rational, hi: &Rational) -> Rational {
    let mid = half(lo, hi);
    if q.sign_at(&mid) != 0 {
        return mid;
    }
    let width = hi - lo;
    let mut denom = BigInt::from(4);
    loop {
        let offset = &width / Rational::from_integer(denom.clone());
        for cand in [&mid + &offset, &mid - &offset] {
            if &cand > lo && &cand < hi && q.sign_at(&cand) != 0 {
                return cand;
            }
        }
        denom *= 2;
    }
}

/// Shrinks an interval known to hold exactly one (simple) root of `q` to width
/// at most 1/2^16 by sign bisection. Endpoints stay off the roots of `q`.
fn refine_single_root(q: &IntPoly, mut lo: Rational, mut hi: Rational) -> (Rational, Rational) {
    let width = isolation_width();
    let mut s_lo = q.sign_at(&lo);
    debug_assert!(s_lo != 0 && q.sign_at(&hi) != 0 && s_lo != q.sign_at(&hi));
    while &hi - &lo > width {
        let mid = half(&lo, &hi);
        let s = q.sign_at(&mid);
        if s == 0 {
            // The root is exactly `mid`; return a tight bracket around it.
            let w = Rational::new(BigInt::one(), BigInt::from(1i64 << 20));
            let cand_lo = &mid - &w;
            let cand_hi = &mid + &w;
            let out_lo = if cand_lo > lo {
                cand_lo
            } else {
                half(&lo, &mid)
            };
            let out_hi = if cand_hi < hi {
                cand_hi
            } else {
                half(&mid, &hi)
            };
            return (out_lo, out_hi);
        }
        if s == s_lo {
            lo = mid;
            s_lo = s;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Isolates all distinct real roots of the chain polynomial in `(lo, hi)` into
/// disjoint-or-touching intervals whose endpoints are never roots, so every
/// root lies strictly inside its interval.
fn isolate_roots(
    chain: &SturmChain,
    lo: Rational,
    v_lo: usize,
    hi: Rational,
    v_hi: usize,
    out: &mut Vec<(Rational, Rational)>,
) {
    let count = v_lo - v_hi;
    if count == 0 {
        return;
    }
    let q = &chain.polys[0];
    if count == 1 {
        out.push(refine_single_root(q, lo, hi));
        return;
    }
    let m = splitter(q, &lo, &hi);
    let v_m = chain.variations_at(&m);
    isolate_roots(chain, lo, v_lo, m.clone(), v_m, out);
    isolate_roots(chain, m, v_m, hi, v_hi, out);
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// Outcome of a nonnegativity certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Exactly verified `p ≥ 0` on the closed interval.
    CertifiedNonneg,
    /// A point with a strictly negative exact value was found and recorded.
    Violated,
    /// The subject is the zero polynomial (the equality case).
    DegenerateZero,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::CertifiedNonneg => "certified_nonneg",
            Verdict::Violated => "violated",
            Verdict::DegenerateZero => "degenerate_zero",
        };
        write!(f, "{s}")
    }
}

/// Machine-checkable record of a nonnegativity check on an interval.
///
/// The certificate re-validates from its fields alone, without re-running root
/// isolation: re-derive the square-free part of the subject, rebuild its Sturm
/// chain, recount roots over the deterministically nudged interval, and
/// re-evaluate the subject exactly at the recorded sample points and endpoints.
/// See [`NonnegCertificate::revalidate`].
#[derive(Debug, Clone, PartialEq)]
pub struct NonnegCertificate {
    /// The polynomial whose nonnegativity is asserted.
    pub subject: Poly,
    /// Closed certification interval `[a, b]`.
    pub interval: (Rational, Rational),
    /// Square-free part of the subject (zero polynomial for the degenerate case).
    pub square_free_part: Poly,
    /// Distinct real roots of the square-free part in the outward-nudged
    /// interval `(a - k/1024, b + k'/1024]`, including roots at the endpoints.
    pub interior_root_count: u32,
    /// Rational points strictly between consecutive isolated roots (and between
    /// the endpoints and the extreme roots where such a gap exists).
    pub sample_points: Vec<Rational>,
    /// Exact sign of the subject at each sample point.
    pub sample_signs: Vec<i8>,
    /// Exact values of the subject at `a` and `b`.
    pub endpoint_values: (Rational, Rational),
    pub verdict: Verdict,
}

/// Certifies `p ≥ 0` on the closed interval `[a, b]` by exact root isolation
/// and sign sampling.
///
/// The verdict is `CertifiedNonneg` iff both endpoint values and every sampled
/// value are nonnegative, `DegenerateZero` iff `p` is the zero polynomial, and
/// `Violated` otherwise, in which case a witness point with strictly negative
/// exact value is among the recorded samples or endpoints.
pub fn certify_nonneg(p: &Poly, a: &Rational, b: &Rational) -> Result<NonnegCertificate, Error> {
    if a >= b {
        return Err(Error::EmptyInterval);
    }
    if p.is_zero() {
        return Ok(NonnegCertificate {
            subject: p.clone(),
            interval: (a.clone(), b.clone()),
            square_free_part: Poly::zero(),
            interior_root_count: 0,
            sample_points: Vec::new(),
            sample_signs: Vec::new(),
            endpoint_values: (Rational::zero(), Rational::zero()),
            verdict: Verdict::DegenerateZero,
        });
    }

    let sf = square_free(p)?;
    let chain = sturm_chain(&sf)?;
    let q = &chain.polys[0];

    // Outward nudges keep Sturm evaluation off the endpoint roots.
    let lo = nudge_down(q, a)?;
    let hi = nudge_up(q, b)?;
    let v_lo = chain.variations_at(&lo);
    let v_hi = chain.variations_at(&hi);
    let total = v_lo - v_hi;

    let mut intervals = Vec::with_capacity(total);
    isolate_roots(&chain, lo, v_lo, hi, v_hi, &mut intervals);
    intervals.sort_by(|x, y| x.0.cmp(&y.0));
    debug_assert_eq!(intervals.len(), total);

    // Sample once in each root-free segment that meets the open interval. The
    // segments adjacent to `a` and `b` are already covered by the exact
    // endpoint evaluations, since the subject keeps a constant sign there.
    let mut samples = Vec::new();
    let mut push = |s: Rational| {
        if &s > a && &s < b {
            samples.push(s);
        }
    };
    if intervals.is_empty() {
        push(half(a, b));
    } else {
        push(half(a, &intervals[0].0));
        for w in intervals.windows(2) {
            push(half(&w[0].1, &w[1].0));
        }
        push(half(&intervals[intervals.len() - 1].1, b));
    }

    let p_int = IntPoly::from_rational(p);
    let mut signs: Vec<i8> = samples.iter().map(|s| p_int.sign_at(s)).collect();
    let ea = p.evaluate(a);
    let eb = p.evaluate(b);

    let endpoints_ok = !ea.is_negative() && !eb.is_negative();
    let samples_ok = signs.iter().all(|&s| s >= 0);
    let verdict = if endpoints_ok && samples_ok {
        Verdict::CertifiedNonneg
    } else {
        Verdict::Violated
    };

    // Guarantee a recorded witness sample when only an endpoint is negative.
    if verdict == Verdict::Violated && samples_ok {
        if ea.is_negative() {
            samples.push(a.clone());
            signs.push(-1);
        } else {
            samples.push(b.clone());
            signs.push(-1);
        }
    }

    Ok(NonnegCertificate {
        subject: p.clone(),
        interval: (a.clone(), b.clone()),
        square_free_part: sf,
        interior_root_count: total as u32,
        sample_points: samples,
        sample_signs: signs,
        endpoint_values: (ea, eb),
        verdict,
    })
}

impl NonnegCertificate {
    /// Re-checks the certificate from its fields alone (no root isolation).
    ///
    /// Verifies that the recorded square-free part, root count, sample signs,
    /// endpoint values and verdict are all reproduced by fresh exact
    /// computation. Returns the reason on the first mismatch.
    pub fn revalidate(&self) -> Result<(), Error> {
        let fail = |msg: &str| Err(Error::InvalidCertificate(msg.to_string()));
        let (a, b) = (&self.interval.0, &self.interval.1);
        if a >= b {
            return fail("interval endpoints out of order");
        }
        if self.sample_points.len() != self.sample_signs.len() {
            return fail("sample point/sign length mismatch");
        }
        if self.subject.is_zero() {
            if self.verdict != Verdict::DegenerateZero {
                return fail("zero subject must carry the degenerate_zero verdict");
            }
            return Ok(());
        }
        if self.verdict == Verdict::DegenerateZero {
            return fail("degenerate_zero verdict on a nonzero subject");
        }

        if square_free(&self.subject)? != self.square_free_part {
            return fail("square-free part does not match the subject");
        }
        let chain = sturm_chain(&self.square_free_part)?;
        let q = &chain.polys[0];
        let lo = nudge_down(q, a)?;
        let hi = nudge_up(q, b)?;
        let fresh = chain.variations_at(&lo) - chain.variations_at(&hi);
        if fresh as u32 != self.interior_root_count {
            return fail("root count does not match a fresh Sturm count");
        }

        let p_int = IntPoly::from_rational(&self.subject);
        for (pt, &sign) in self.sample_points.iter().zip(&self.sample_signs) {
            if p_int.sign_at(pt) != sign {
                return fail("recorded sample sign does not match exact evaluation");
            }
        }
        if self.subject.evaluate(a) != self.endpoint_values.0
            || self.subject.evaluate(b) != self.endpoint_values.1
        {
            return fail("endpoint values do not match exact evaluation");
        }

        let all_nonneg = self.sample_signs.iter().all(|&s| s >= 0)
            && !self.endpoint_values.0.is_negative()
            && !self.endpoint_values.1.is_negative();
        match self.verdict {
            Verdict::CertifiedNonneg if !all_nonneg => {
                fail("certified_nonneg verdict with a negative record")
            }
            Verdict::Violated if all_nonneg => fail("violated verdict without a witness"),
            _ => Ok(()),
        }
    }
}

fn unit_interval() -> (Rational, Rational) {
    (
        Rational::from_integer(BigInt::from(-1)),
        Rational::from_integer(BigInt::from(1)),
    )
}

/// Certifies the adjacent-pair gap inequality for `(ell, d)`: the defect
/// polynomial [`gap_polynomial`] is nonnegative on `[-1, 1]`.
pub fn certify_improved(ell: u32, dim: Dimension) -> Result<NonnegCertificate, Error> {
    let (a, b) = unit_interval();
    certify_nonneg(&gap_polynomial(ell, dim), &a, &b)
}

/// Certifies the cumulative inequality for `(ell, d)`: the defect polynomial
/// [`total_gap_polynomial`] is nonnegative on `[-1, 1]`.
///
/// At `ell = 1` both sides of the inequality coincide, the defect is the zero
/// polynomial, and the verdict is [`Verdict::DegenerateZero`].
pub fn certify_original(ell: u32, dim: Dimension) -> Result<NonnegCertificate, Error> {
    let (a, b) = unit_interval();
    certify_nonneg(&total_gap_polynomial(ell, dim), &a, &b)
}

/// Exact telescoping check: the cumulative defect equals the sum of the
/// adjacent-pair defects,
/// `total_gap_polynomial(ell) = Σ_{k=1}^{ell-1} gap_polynomial(k)` (an empty
/// sum at `ell = 1`).
pub fn telescoping_identity(ell: u32, dim: Dimension) -> bool {
    assert!(ell >= 1, "telescoping_identity requires ell >= 1");
    let mut sum = Poly::zero();
    for k in 1..ell {
        sum = &sum + &gap_polynomial(k, dim);
    }
    sum == total_gap_polynomial(ell, dim)
}

// ---------------------------------------------------------------------------
// Serialization: rationals as "numerator/denominator" strings
// ---------------------------------------------------------------------------

pub(crate) fn rational_to_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub(crate) fn rational_from_string(s: &str) -> Result<Rational, Error> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidCertificate(format!("bad integer literal {t:?}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::InvalidCertificate("zero denominator".into()));
            }
            Ok(Rational::new(parse_int(n)?, den))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

fn poly_to_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(rational_to_string).collect()
}

fn poly_from_strings(v: &[String]) -> Result<Poly, Error> {
    let coeffs = v
        .iter()
        .map(|s| rational_from_string(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Poly::new(coeffs))
}

#[derive(Serialize, Deserialize)]
struct CertificateWire {
    subject: Vec<String>,
    interval: [String; 2],
    square_free_part: Vec<String>,
    interior_root_count: u32,
    sample_points: Vec<String>,
    sample_signs: Vec<i8>,
    endpoint_values: [String; 2],
    verdict: Verdict,
}

impl Serialize for NonnegCertificate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CertificateWire {
            subject: poly_to_strings(&self.subject),
            interval: [
                rational_to_string(&self.interval.0),
                rational_to_string(&self.interval.1),
            ],
            square_free_part: poly_to_strings(&self.square_free_part),
            interior_root_count: self.interior_root_count,
            sample_points: self.sample_points.iter().map(rational_to_string).collect(),
            sample_signs: self.sample_signs.clone(),
            endpoint_values: [
                rational_to_string(&self.endpoint_values.0),
                rational_to_string(&self.endpoint_values.1),
            ],
            verdict: self.verdict,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NonnegCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let wire = CertificateWire::deserialize(deserializer)?;
        let conv = |e: Error| DeError::custom(e.to_string());
        Ok(NonnegCertificate {
            subject: poly_from_strings(&wire.subject).map_err(conv)?,
            interval: (
                rational_from_string(&wire.interval[0]).map_err(conv)?,
                rational_from_string(&wire.interval[1]).map_err(conv)?,
            ),
            square_free_part: poly_from_strings(&wire.square_free_part).map_err(conv)?,
            interior_root_count: wire.interior_root_count,
            sample_points: wire
                .sample_points
                .iter()
                .map(|s| rational_from_string(s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(conv)?,
            sample_signs: wire.sample_signs,
            endpoint_values: (
                rational_from_string(&wire.endpoint_values[0]).map_err(conv)?,
                rational_from_string(&wire.endpoint_values[1]).map_err(conv)?,
            ),
            verdict: wire.verdict,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::legendre::Dimension;
    use num_traits::ToPrimitive;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| q(c, 1)).collect())
    }

    fn dim(d: u32) -> Dimension {
        Dimension::new(d).unwrap()
    }

    /// Coarse float root counter used as an independent check: counts sign
    /// changes of `p` over a uniform grid.
    fn grid_sign_changes(p: &Poly, a: f64, b: f64, n: usize) -> usize {
        let eval = |x: f64| {
            p.coeffs()
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap())
        };
        let mut count = 0;
        let mut last = eval(a).signum();
        for i in 1..=n {
            let x = a + (b - a) * i as f64 / n as f64;
            let s = eval(x).signum();
            if s != last && s != 0.0 {
                if last != 0.0 {
                    count += 1;
                } else {
                    last = s;
                    continue;
                }
            }
            last = s;
        }
        count
    }

    #[test]
    fn square_free_examples() {
        // x^2 -> x.
        assert_eq!(square_free(&poly(&[0, 0, 1])).unwrap(), poly(&[0, 1]));
        // 1 - x^2 is already square-free and has |leading| = 1.
        let p = poly(&[1, 0, -1]);
        assert_eq!(square_free(&p).unwrap(), p);
        // (x-1)^2 (x+2) -> (x-1)(x+2) up to positive scale.
        let p = &(&poly(&[-1, 1]) * &poly(&[-1, 1])) * &poly(&[2, 1]);
        let sf = square_free(&p).unwrap();
        assert_eq!(sf.degree(), Some(2));
        assert!(sf.evaluate(&q(1, 1)).is_zero());
        assert!(sf.evaluate(&q(-2, 1)).is_zero());
        assert!(square_free(&Poly::zero()).is_err());
    }

    #[test]
    fn square_free_of_gap_polynomial_keeps_roots() {
        let g = gap_polynomial(1, dim(2));
        let sf = square_free(&g).unwrap();
        // Same real roots: both vanish exactly at ±1 and the float sign
        // pattern over a fine grid agrees.
        assert!(sf.evaluate(&q(1, 1)).is_zero());
        assert!(sf.evaluate(&q(-1, 1)).is_zero());
        assert_eq!(
            grid_sign_changes(&g, -0.999, 0.999, 10_000),
            grid_sign_changes(&sf, -0.999, 0.999, 10_000)
        );
    }

    #[test]
    fn sturm_chain_shapes() {
        let chain = sturm_chain(&poly(&[0, 1])).unwrap(); // x
        assert_eq!(chain.len(), 2);
        assert_eq!(count_roots(&chain, &q(-1, 1), &q(1, 1)).unwrap(), 1);

        let chain = sturm_chain(&poly(&[-2, 0, 1])).unwrap(); // x^2 - 2
        assert_eq!(count_roots(&chain, &q(-1, 1), &q(1, 1)).unwrap(), 0);
        assert_eq!(count_roots(&chain, &q(-2, 1), &q(2, 1)).unwrap(), 2);

        assert!(sturm_chain(&Poly::zero()).is_err());
    }

    #[test]
    fn count_roots_with_endpoint_roots() {
        // 1 - x^2 with roots exactly at the query endpoints: outward nudging
        // still counts both.
        let chain = sturm_chain(&poly(&[1, 0, -1])).unwrap();
        assert_eq!(count_roots(&chain, &q(-1, 1), &q(1, 1)).unwrap(), 2);
        assert_eq!(count_roots(&chain, &q(-2, 1), &q(2, 1)).unwrap(), 2);
        assert!(count_roots(&chain, &q(1, 1), &q(1, 1)).is_err());
    }

    #[test]
    fn count_roots_matches_grid_oracle_on_gap_polynomials() {
        for &(ell, d) in &[(2u32, 3u32), (3, 4), (5, 2)] {
            let sf = square_free(&gap_polynomial(ell, dim(d))).unwrap();
            let chain = sturm_chain(&sf).unwrap();
            let counted = count_roots(&chain, &q(-1, 1), &q(1, 1)).unwrap();
            // The oracle sees interior crossings only; ±1 are exact roots on
            // the boundary, counted by the chain but invisible to the grid.
            let interior = grid_sign_changes(&sf, -0.9999, 0.9999, 10_000);
            assert_eq!(counted, interior + 2, "(ell, d) = ({ell}, {d})");
        }
    }

    #[test]
    fn certify_simple_polynomials() {
        let (a, b) = unit_interval();

        let cert = certify_nonneg(&poly(&[1, 0, -1]), &a, &b).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedNonneg);
        assert_eq!(cert.interior_root_count, 2);
        cert.revalidate().unwrap();

        // -x^2 is negative away from zero: violated, with a recorded witness.
        let cert = certify_nonneg(&poly(&[0, 0, -1]), &a, &b).unwrap();
        assert_eq!(cert.verdict, Verdict::Violated);
        let has_witness = cert.sample_signs.iter().any(|&s| s < 0)
            || cert.endpoint_values.0.is_negative()
            || cert.endpoint_values.1.is_negative();
        assert!(has_witness);
        cert.revalidate().unwrap();

        // x^2 touches zero at an interior even-multiplicity root.
        let cert = certify_nonneg(&poly(&[0, 0, 1]), &a, &b).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedNonneg);
        cert.revalidate().unwrap();

        let cert = certify_nonneg(&Poly::zero(), &a, &b).unwrap();
        assert_eq!(cert.verdict, Verdict::DegenerateZero);
        cert.revalidate().unwrap();

        assert!(certify_nonneg(&poly(&[1]), &b, &a).is_err());
    }

    #[test]
    fn certify_constant_and_linear() {
        let (a, b) = unit_interval();
        assert_eq!(
            certify_nonneg(&poly(&[3]), &a, &b).unwrap().verdict,
            Verdict::CertifiedNonneg
        );
        assert_eq!(
            certify_nonneg(&poly(&[-3]), &a, &b).unwrap().verdict,
            Verdict::Violated
        );
        // x changes sign inside the interval.
        assert_eq!(
            certify_nonneg(&poly(&[0, 1]), &a, &b).unwrap().verdict,
            Verdict::Violated
        );
        // x is nonnegative on [0, 1].
        assert_eq!(
            certify_nonneg(&poly(&[0, 1]), &q(0, 1), &q(1, 1))
                .unwrap()
                .verdict,
            Verdict::CertifiedNonneg
        );
    }

    #[test]
    fn certify_gap_inequalities_small() {
        for &(ell, d) in &[(1u32, 2u32), (1, 3), (2, 3), (3, 4), (2, 20)] {
            let cert = certify_improved(ell, dim(d)).unwrap();
            assert_eq!(
                cert.verdict,
                Verdict::CertifiedNonneg,
                "improved ({ell},{d})"
            );
            cert.revalidate().unwrap();
        }
        for d in [2u32, 3, 7] {
            let cert = certify_original(1, dim(d)).unwrap();
            assert_eq!(cert.verdict, Verdict::DegenerateZero);
        }
        let cert = certify_original(2, dim(2)).unwrap();
        assert_eq!(cert.verdict, Verdict::CertifiedNonneg);
        cert.revalidate().unwrap();
    }

    #[test]
    fn telescoping_small_cases() {
        for d in 2..=12u32 {
            assert!(telescoping_identity(1, dim(d)));
        }
        assert!(telescoping_identity(5, dim(3)));
        assert!(telescoping_identity(10, dim(10)));
    }

    #[test]
    fn certificate_serde_roundtrip_and_determinism() {
        let cert = certify_improved(2, dim(3)).unwrap();
        let json1 = serde_json::to_string(&cert).unwrap();
        let json2 = serde_json::to_string(&certify_improved(2, dim(3)).unwrap()).unwrap();
        assert_eq!(json1, json2, "certificates must be byte-identical");

        let parsed: NonnegCertificate = serde_json::from_str(&json1).unwrap();
        assert_eq!(parsed, cert);
        parsed.revalidate().unwrap();
        assert!(json1.contains("certified_nonneg"));
    }

    #[test]
    fn revalidate_rejects_tampering() {
        let cert = certify_improved(2, dim(3)).unwrap();
        let mut bad = cert.clone();
        bad.interior_root_count += 1;
        assert!(bad.revalidate().is_err());

        let mut bad = cert.clone();
        if !bad.sample_signs.is_empty() {
            bad.sample_signs[0] = -bad.sample_signs[0];
            assert!(bad.revalidate().is_err());
        }

        let mut bad = cert;
        bad.endpoint_values.0 = q(-1, 7);
        assert!(bad.revalidate().is_err());
    }

    #[test]
    fn rational_string_roundtrip() {
        for r in [q(-3, 2), q(0, 1), q(7, 1), q(22, 7)] {
            let s = rational_to_string(&r);
            assert!(s.contains('/'));
            assert_eq!(rational_from_string(&s).unwrap(), r);
        }
        assert_eq!(rational_from_string("5").unwrap(), q(5, 1));
        assert!(rational_from_string("1/0").is_err());
        assert!(rational_from_string("x/2").is_err());
    }
}
