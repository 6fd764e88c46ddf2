//! Ramsey-style bound functions and sparse class profiles.
//!
//! The quasi-wideness thresholds are towers of Ramsey numbers and overflow
//! any machine integer for all but tiny arguments. Everything here is
//! computed with arbitrary-precision integers that saturate to
//! [`BigBound::Huge`] once they pass a configurable cap.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A non-negative integer bound, or `Huge` once it exceeds the cap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BigBound {
    Finite(BigUint),
    Huge,
}

impl BigBound {
    pub fn finite(v: u64) -> Self {
        BigBound::Finite(BigUint::from(v))
    }

    pub fn is_huge(&self) -> bool {
        matches!(self, BigBound::Huge)
    }

    pub fn to_u128(&self) -> Option<u128> {
        match self {
            BigBound::Finite(v) => v.to_u128(),
            BigBound::Huge => None,
        }
    }

    /// `true` iff `count > self`.
    pub fn is_exceeded_by(&self, count: usize) -> bool {
        match self {
            BigBound::Finite(v) => BigUint::from(count) > *v,
            BigBound::Huge => false,
        }
    }
}

impl Ord for BigBound {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BigBound::Finite(a), BigBound::Finite(b)) => a.cmp(b),
            (BigBound::Finite(_), BigBound::Huge) => Ordering::Less,
            (BigBound::Huge, BigBound::Finite(_)) => Ordering::Greater,
            (BigBound::Huge, BigBound::Huge) => Ordering::Equal,
        }
    }
}

impl PartialOrd for BigBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BigBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BigBound::Finite(v) => write!(f, "{v}"),
            BigBound::Huge => f.write_str("HUGE"),
        }
    }
}

impl Serialize for BigBound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Saturating arithmetic: any result above `cap` becomes `Huge`, and `Huge`
/// is absorbing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturating {
    cap: BigUint,
}

impl Default for Saturating {
    fn default() -> Self {
        Self::with_cap(BigUint::one() << 64u32)
    }
}

impl Saturating {
    pub fn with_cap(cap: BigUint) -> Self {
        Self { cap }
    }

    pub fn cap(&self) -> &BigUint {
        &self.cap
    }

    pub fn clamp(&self, v: BigUint) -> BigBound {
        if v > self.cap {
            BigBound::Huge
        } else {
            BigBound::Finite(v)
        }
    }

    pub fn add(&self, a: &BigBound, b: &BigBound) -> BigBound {
        match (a, b) {
            (BigBound::Finite(x), BigBound::Finite(y)) => self.clamp(x + y),
            _ => BigBound::Huge,
        }
    }

    pub fn mul(&self, a: &BigBound, b: &BigBound) -> BigBound {
        match (a, b) {
            (BigBound::Finite(x), _) | (_, BigBound::Finite(x)) if x.is_zero() => {
                BigBound::finite(0)
            }
            (BigBound::Finite(x), BigBound::Finite(y)) => self.clamp(x * y),
            _ => BigBound::Huge,
        }
    }

    /// `base^exp`, stopping as soon as the partial product passes the cap.
    pub fn pow(&self, base: &BigBound, exp: &BigBound) -> BigBound {
        match (base, exp) {
            (_, BigBound::Finite(e)) if e.is_zero() => BigBound::finite(1),
            (BigBound::Finite(b), _) if b.is_zero() || b.is_one() => BigBound::Finite(b.clone()),
            (BigBound::Huge, _) | (_, BigBound::Huge) => BigBound::Huge,
            (BigBound::Finite(b), BigBound::Finite(e)) => {
                // b >= 2, so more than cap.bits() factors always overflow.
                if *e > BigUint::from(self.cap.bits()) {
                    return BigBound::Huge;
                }
                let e = e.to_u64().unwrap_or(u64::MAX);
                let mut acc = BigUint::one();
                for _ in 0..e {
                    acc *= b;
                    if acc > self.cap {
                        return BigBound::Huge;
                    }
                }
                BigBound::Finite(acc)
            }
        }
    }
}

/// Which value stands in for the unbound `k` in `b_h(x) = R(k+1, h, ...)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum KReading {
    /// `k = h`, so the colour count is `h + 1`.
    #[default]
    HPlusOne,
    /// `k = h - 2`, so the colour count is `h - 1`.
    HMinusOne,
}

impl KReading {
    fn colours(self, h: u64) -> u64 {
        match self {
            KReading::HPlusOne => h + 1,
            KReading::HMinusOne => h - 1,
        }
    }
}

/// The Ramsey bound `R(x, y, z)` and the derived `b_h`, `c_h`, `N(h, r, m)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RamseyBounds {
    pub arith: Saturating,
    pub k_reading: KReading,
}

impl RamseyBounds {
    /// Upper bound on the Ramsey number: every `colors`-colouring of the
    /// `tuple_size`-subsets of a set with at least (hence also more than)
    /// the returned number of elements has a homogeneous subset of size
    /// `target`.
    ///
    /// `tuple_size = 1` is the pigeonhole bound. Larger tuple sizes use the
    /// Erdős–Rado end-homogeneous sequence argument, evaluated exactly from
    /// the bound for `tuple_size - 1`.
    pub fn ramsey_upper(&self, colors: u64, tuple_size: u64, target: u64) -> Result<BigBound> {
        if colors == 0 || tuple_size == 0 || target == 0 {
            return Err(Error::InvalidParameter(
                "ramsey_upper needs colors, tuple_size and target >= 1".into(),
            ));
        }
        Ok(self.ramsey(colors, tuple_size, &BigBound::finite(target)))
    }

    fn ramsey(&self, x: u64, y: u64, z: &BigBound) -> BigBound {
        let BigBound::Finite(z) = z else {
            return BigBound::Huge;
        };
        if *z <= BigUint::from(y) || x == 1 {
            return self.arith.clamp(z.clone());
        }
        if y == 1 {
            return self.arith.clamp(BigUint::from(x) * (z - 1u32) + 1u32);
        }
        let BigBound::Finite(prev) = self.ramsey(x, y - 1, &BigBound::Finite(z.clone())) else {
            return BigBound::Huge;
        };
        // An end-homogeneous sequence a_1..a_len with len = prev + 1 yields
        // the homogeneous set. Picking a_j splits the remaining pool into
        // q_j = x^C(j-1, y-2) classes; need_j is the pool size required
        // before picking a_j.
        let len = prev + 1u32;
        let cap_bits = BigUint::from(self.arith.cap.bits());
        // Steps j in [y-1, len-2] at least double the requirement.
        let doubling = if len >= BigUint::from(y + 1) {
            &len - BigUint::from(y)
        } else {
            BigUint::zero()
        };
        if doubling > cap_bits {
            return BigBound::Huge;
        }
        let len = len.to_u64().expect("bounded by cap bits");
        let mut need = BigUint::one();
        for j in (1..len).rev() {
            let exponent = binomial(j - 1, y - 2);
            let q = match self
                .arith
                .pow(&BigBound::finite(x), &BigBound::Finite(exponent))
            {
                BigBound::Finite(q) => q,
                BigBound::Huge if need > BigUint::one() => return BigBound::Huge,
                BigBound::Huge => {
                    // need_{len-1} = q * 0 + 2 regardless of q.
                    need = BigUint::from(2u32);
                    continue;
                }
            };
            need = q * (need - 1u32) + 2u32;
            if need > self.arith.cap {
                return BigBound::Huge;
            }
        }
        self.arith.clamp(need)
    }

    /// `b_h(x) = R(k+1, h, (h-2)(x+1))`.
    pub fn b(&self, h: u64, x: &BigBound) -> BigBound {
        let z = self.arith.mul(
            &BigBound::finite(h - 2),
            &self.arith.add(x, &BigBound::finite(1)),
        );
        self.ramsey(self.k_reading.colours(h), h, &z)
    }

    /// `b_h` iterated `times` times.
    pub fn b_iter(&self, h: u64, times: usize, x: &BigBound) -> BigBound {
        let mut v = x.clone();
        for _ in 0..times {
            if v.is_huge() {
                break;
            }
            v = self.b(h, &v);
        }
        v
    }

    /// `c_h(x) = R(2, 2, b_h^{h-2}(x))`.
    pub fn c(&self, h: u64, x: &BigBound) -> BigBound {
        let inner = self.b_iter(h, (h - 2) as usize, x);
        self.ramsey(2, 2, &inner)
    }

    pub fn c_iter(&self, h: u64, times: usize, x: &BigBound) -> BigBound {
        let mut v = x.clone();
        for _ in 0..times {
            if v.is_huge() {
                break;
            }
            v = self.c(h, &v);
        }
        v
    }

    /// `N(h, r, m) = c_h^r(m)`.
    pub fn n_threshold(&self, h: u64, r: usize, m: u64) -> Result<BigBound> {
        if h < 3 {
            return Err(Error::InvalidParameter("n_threshold needs h >= 3".into()));
        }
        Ok(self.c_iter(h, r, &BigBound::finite(m)))
    }
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Evaluates [`RamseyBounds::ramsey_upper`] with the default 2^64 cap.
pub fn ramsey_upper(colors: u64, tuple_size: u64, target: u64) -> Result<BigBound> {
    RamseyBounds::default().ramsey_upper(colors, tuple_size, target)
}

/// Evaluates [`RamseyBounds::n_threshold`] with the default cap and `k = h`.
pub fn n_threshold(h: u64, r: usize, m: u64) -> Result<BigBound> {
    RamseyBounds::default().n_threshold(h, r, m)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum ProfileMode {
    /// Formulas exactly as published, including their known defects.
    PaperFaithful,
    #[default]
    PracticalSafe,
}

type CliqueFn = Arc<dyn Fn(usize) -> usize + Send + Sync>;

#[derive(Clone)]
enum Family {
    BoundedDegree { max_deg: usize },
    ExcludedClique { h: CliqueFn },
}

/// Quantitative description of a sparse graph class: the excluded clique
/// size `h(r)` at depth `r`, the margin `s(r)` and the threshold `N(r, m)`.
#[derive(Clone)]
pub struct ClassProfile {
    name: String,
    mode: ProfileMode,
    family: Family,
    bounds: RamseyBounds,
}

impl fmt::Debug for ClassProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassProfile")
            .field("name", &self.name)
            .field("mode", &self.mode)
            .finish_non_exhaustive()
    }
}

/// `1 + Δ Σ_{i<ρ} (Δ-1)^i`: the largest possible `ρ`-ball in a graph of
/// maximum degree Δ.
pub fn ball_size_bound(max_deg: u64, radius: usize) -> BigBound {
    let arith = Saturating::default();
    let mut sum = BigBound::finite(0);
    for i in 0..radius {
        let term = arith.pow(
            &BigBound::finite(max_deg.saturating_sub(1)),
            &BigBound::finite(i as u64),
        );
        sum = arith.add(&sum, &term);
    }
    arith.add(
        &BigBound::finite(1),
        &arith.mul(&BigBound::finite(max_deg), &sum),
    )
}

impl ClassProfile {
    /// Graphs of maximum degree `max_deg`.
    pub fn bounded_degree(max_deg: usize, mode: ProfileMode) -> Result<Self> {
        if max_deg < 2 {
            return Err(Error::InvalidParameter(
                "bounded-degree profile needs max_deg >= 2".into(),
            ));
        }
        Ok(Self {
            name: format!("degree:{max_deg}"),
            mode,
            family: Family::BoundedDegree { max_deg },
            bounds: RamseyBounds::default(),
        })
    }

    /// A class excluding `K_{h(r)}` as a depth-`r` minor. `h(r) >= 3`.
    pub fn from_h<F>(name: impl Into<String>, h: F, mode: ProfileMode) -> Self
    where
        F: Fn(usize) -> usize + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            mode,
            family: Family::ExcludedClique { h: Arc::new(h) },
            bounds: RamseyBounds::default(),
        }
    }

    /// Resolves `degree:<D>`, `clique:<h>`, `forest` (h = 3) and `planar`
    /// (h = 5).
    pub fn by_name(name: &str, mode: ProfileMode) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown profile `{name}`"));
        match name {
            "forest" => Ok(Self::from_h("forest", |_| 3, mode)),
            "planar" => Ok(Self::from_h("planar", |_| 5, mode)),
            _ => {
                let (kind, arg) = name.split_once(':').ok_or_else(bad)?;
                let value: usize = arg.parse().map_err(|_| bad())?;
                match kind {
                    "degree" => Self::bounded_degree(value, mode),
                    "clique" if value >= 3 => Ok(Self::from_h(name, move |_| value, mode)),
                    _ => Err(bad()),
                }
            }
        }
    }

    pub fn with_k_reading(mut self, k_reading: KReading) -> Self {
        self.bounds.k_reading = k_reading;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn mode(&self) -> ProfileMode {
        self.mode
    }

    pub fn bounds(&self) -> &RamseyBounds {
        &self.bounds
    }

    /// Excluded clique size at depth `r`.
    pub fn h(&self, r: usize) -> usize {
        match &self.family {
            Family::BoundedDegree { max_deg } => max_deg + 2,
            Family::ExcludedClique { h } => h(r),
        }
    }

    /// The margin `s(r)`: bottlenecks satisfy `|S| < s(r)`.
    pub fn margin(&self, r: usize) -> usize {
        match &self.family {
            // Margin 0: the bottleneck is always empty.
            Family::BoundedDegree { .. } => 0,
            Family::ExcludedClique { h } => h(r) - 1,
        }
    }

    /// Largest bottleneck size the margin permits.
    pub fn max_bottleneck(&self, r: usize) -> usize {
        self.margin(r).saturating_sub(1)
    }

    /// The threshold `N(r, m)`.
    pub fn threshold(&self, r: usize, m: u64) -> BigBound {
        let arith = &self.bounds.arith;
        match (&self.family, self.mode) {
            (Family::BoundedDegree { max_deg }, ProfileMode::PaperFaithful) => {
                // Stored verbatim; note the missing dependence on m.
                let d = *max_deg as u64;
                let base = arith.pow(&BigBound::finite(d - 1), &BigBound::finite(r as u64));
                arith.add(&base, &BigBound::finite(d + 1))
            }
            (Family::BoundedDegree { max_deg }, ProfileMode::PracticalSafe) => arith.mul(
                &BigBound::finite(m),
                &ball_size_bound(*max_deg as u64, 2 * r),
            ),
            (Family::ExcludedClique { h }, _) => {
                let h = h(r).max(3) as u64;
                self.bounds.c_iter(h, r, &BigBound::finite(m))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(v: u64) -> BigBound {
        BigBound::finite(v)
    }

    #[test]
    fn saturating_arithmetic() {
        let a = Saturating::with_cap(BigUint::from(100u32));
        assert_eq!(a.add(&fin(60), &fin(40)), fin(100));
        assert_eq!(a.add(&fin(60), &fin(41)), BigBound::Huge);
        assert_eq!(a.mul(&fin(0), &BigBound::Huge), fin(0));
        assert_eq!(a.mul(&fin(3), &BigBound::Huge), BigBound::Huge);
        assert_eq!(a.pow(&fin(3), &fin(4)), fin(81));
        assert_eq!(a.pow(&fin(3), &fin(5)), BigBound::Huge);
        assert_eq!(a.pow(&fin(1), &BigBound::Huge), fin(1));
        assert_eq!(a.pow(&BigBound::Huge, &fin(0)), fin(1));
        assert!(fin(u64::MAX) < BigBound::Huge);
        assert!(fin(5).is_exceeded_by(6));
        assert!(!fin(5).is_exceeded_by(5));
        assert!(!BigBound::Huge.is_exceeded_by(usize::MAX));
    }

    #[test]
    fn ramsey_examples() {
        assert_eq!(ramsey_upper(2, 1, 3).unwrap(), fin(5));
        assert_eq!(ramsey_upper(7, 4, 4).unwrap(), fin(4));
        assert_eq!(ramsey_upper(3, 5, 2).unwrap(), fin(2));
        let r = ramsey_upper(2, 2, 3).unwrap();
        assert!(r >= fin(6));
        assert_eq!(r, fin(32));
        assert!(ramsey_upper(0, 1, 1).is_err());
    }

    #[test]
    fn ramsey_is_monotone_on_grid() {
        for x in 1..=3u64 {
            for y in 1..=3u64 {
                for z in 1..=6u64 {
                    let v = ramsey_upper(x, y, z).unwrap();
                    assert!(ramsey_upper(x + 1, y, z).unwrap() >= v, "x {x} {y} {z}");
                    assert!(ramsey_upper(x, y, z + 1).unwrap() >= v, "z {x} {y} {z}");
                    // Monotone in the tuple size wherever the target exceeds it.
                    if z > y + 1 {
                        assert!(ramsey_upper(x, y + 1, z).unwrap() >= v, "y {x} {y} {z}");
                    }
                }
            }
        }
    }

    #[test]
    fn threshold_examples() {
        for h in 3..7 {
            assert_eq!(n_threshold(h, 0, 9).unwrap(), fin(9));
        }
        let b3 = ramsey_upper(4, 3, 3).unwrap();
        assert_eq!(b3, fin(3));
        let expected = RamseyBounds::default().ramsey(2, 2, &b3);
        assert_eq!(n_threshold(3, 1, 2).unwrap(), expected);
        assert_eq!(expected, fin(32));
        assert_eq!(n_threshold(5, 3, 10).unwrap(), BigBound::Huge);
        assert!(n_threshold(2, 1, 1).is_err());
    }

    #[test]
    fn threshold_dominates_m_and_grows() {
        let rb = RamseyBounds::default();
        for h in 3..5u64 {
            for r in 0..3 {
                let mut prev: Option<BigBound> = None;
                for m in 1..6u64 {
                    let v = rb.n_threshold(h, r, m).unwrap();
                    assert!(v >= fin(m));
                    if let Some(p) = prev {
                        assert!(v > p || v.is_huge(), "h={h} r={r} m={m}");
                    }
                    prev = Some(v);
                }
            }
        }
    }

    #[test]
    fn k_reading_changes_colour_count() {
        assert_eq!(KReading::HPlusOne.colours(4), 5);
        assert_eq!(KReading::HMinusOne.colours(4), 3);
        let alt = RamseyBounds {
            k_reading: KReading::HMinusOne,
            ..Default::default()
        };
        // h = 3, x = 1: target (h-2)(x+1) = 2 <= h, identical under both readings.
        assert_eq!(alt.b(3, &fin(1)), fin(2));
        assert_eq!(RamseyBounds::default().b(3, &fin(1)), fin(2));
        // h = 3, x = 3: R(2, 3, 4) and R(4, 3, 4) both exceed 2^64.
        assert!(alt.b(3, &fin(3)).is_huge());
    }

    #[test]
    fn bounded_degree_profiles() {
        let paper = ClassProfile::bounded_degree(3, ProfileMode::PaperFaithful).unwrap();
        assert_eq!(paper.threshold(2, 1), fin(8));
        assert_eq!(paper.threshold(2, 50), fin(8));
        let safe = ClassProfile::bounded_degree(3, ProfileMode::PracticalSafe).unwrap();
        assert_eq!(safe.threshold(1, 2), fin(20));
        assert_eq!(safe.threshold(0, 7), fin(7));
        for delta in 2..6 {
            let p = ClassProfile::bounded_degree(delta, ProfileMode::PracticalSafe).unwrap();
            assert!(p.threshold(2, 1) >= fin(1));
            assert_eq!(p.threshold(2, 1), ball_size_bound(delta as u64, 4));
            assert_eq!(
                (p.margin(3), p.max_bottleneck(3), p.h(3)),
                (0, 0, delta + 2)
            );
            assert!(!p.threshold(2, 4).is_huge());
        }
        assert!(ClassProfile::bounded_degree(1, ProfileMode::PracticalSafe).is_err());
    }

    #[test]
    fn clique_profiles() {
        let forest = ClassProfile::from_h("forest", |_| 3, ProfileMode::PaperFaithful);
        assert_eq!((forest.margin(0), forest.max_bottleneck(0)), (2, 1));
        let five = ClassProfile::from_h("k5", |_| 5, ProfileMode::PaperFaithful);
        assert_eq!(five.threshold(0, 13), fin(13));
        let grow = ClassProfile::from_h("grow", |r| r + 4, ProfileMode::PaperFaithful);
        assert_eq!(grow.margin(2), 5);
        assert_eq!(grow.h(2), 6);
    }

    #[test]
    fn profiles_by_name() {
        let m = ProfileMode::PracticalSafe;
        assert_eq!(ClassProfile::by_name("degree:4", m).unwrap().h(1), 6);
        assert_eq!(ClassProfile::by_name("clique:6", m).unwrap().h(1), 6);
        assert_eq!(ClassProfile::by_name("planar", m).unwrap().h(9), 5);
        assert_eq!(ClassProfile::by_name("forest", m).unwrap().name(), "forest");
        assert!(ClassProfile::by_name("clique:2", m).is_err());
        assert!(ClassProfile::by_name("torus", m).is_err());
    }
}
