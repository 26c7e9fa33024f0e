//! Brute-force oracles: exhaustive solution enumeration over a box, gap
//! statistics, and the complete-composite machinery.
//!
//! These exist to check the structural criteria against ground truth on
//! finite ranges, so they favor exactness and predictable resource use over
//! cleverness. Enumeration indexes one side's values in a hash map and
//! probes with the other side; when the box outgrows the configured memory
//! budget it degrades to a sort-merge join over piecewise-monotone value
//! streams, which needs O(deg) state instead of O(box).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::polynomial::{Degree, IntPoly};

/// Tuning knobs for [`enumerate_solutions_with`].
#[derive(Debug, Clone)]
pub struct EnumerationConfig {
    /// Largest number of values the hash index may hold; boxes wider than
    /// this use the sort-merge join instead.
    pub max_index_entries: u64,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            max_index_entries: 10_000_000,
        }
    }
}

/// All integer solutions of `f(x) = g(y)` with `|x| <= bound` and
/// `|y| <= bound`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    f: IntPoly,
    g: IntPoly,
    bound: u64,
    solutions: Vec<(i64, i64)>,
}

impl SolutionSet {
    pub fn f(&self) -> &IntPoly {
        &self.f
    }

    pub fn g(&self) -> &IntPoly {
        &self.g
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn solutions(&self) -> &[(i64, i64)] {
        &self.solutions
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn equation(&self) -> String {
        format!(
            "{} = {}",
            self.f.to_string_var("x"),
            self.g.to_string_var("y")
        )
    }
}

pub fn enumerate_solutions(f: &IntPoly, g: &IntPoly, bound: u64) -> Result<SolutionSet> {
    enumerate_solutions_with(f, g, bound, &EnumerationConfig::default())
}

pub fn enumerate_solutions_with(
    f: &IntPoly,
    g: &IntPoly,
    bound: u64,
    config: &EnumerationConfig,
) -> Result<SolutionSet> {
    for (name, p) in [("f", f), ("g", g)] {
        match p.degree() {
            Degree::Finite(d) if d >= 1 => {}
            _ => {
                return Err(Error::domain(format!(
                    "enumeration requires nonconstant polynomials; {name} is constant"
                )))
            }
        }
    }
    if bound == 0 {
        return Err(Error::domain("box bound must be >= 1"));
    }
    if bound > (i64::MAX as u64) / 4 {
        return Err(Error::capacity(format!(
            "box bound {bound} exceeds the addressable coordinate range"
        )));
    }
    let b = bound as i64;
    let span = 2 * bound + 1;

    let mut solutions = if span <= config.max_index_entries {
        hash_join(f, g, b)
    } else {
        merge_join(f, g, b)
    };
    solutions.sort_unstable();
    Ok(SolutionSet {
        f: f.clone(),
        g: g.clone(),
        bound,
        solutions,
    })
}

/// Index g's values, probe with f's. Memory O(box).
fn hash_join(f: &IntPoly, g: &IntPoly, b: i64) -> Vec<(i64, i64)> {
    let mut index: HashMap<BigInt, Vec<i64>> = HashMap::new();
    for y in -b..=b {
        index.entry(g.eval(&BigInt::from(y))).or_default().push(y);
    }
    (-b..=b)
        .into_par_iter()
        .map(|x| {
            let value = f.eval(&BigInt::from(x));
            match index.get(&value) {
                Some(ys) => ys.iter().map(|&y| (x, y)).collect(),
                None => Vec::new(),
            }
        })
        .reduce(Vec::new, |mut acc, mut chunk| {
            acc.append(&mut chunk);
            acc
        })
}

/// One maximal run of arguments over which the polynomial is monotone. The
/// stream yields (value, argument) pairs in nondecreasing value order.
struct SegmentStream<'a> {
    poly: &'a IntPoly,
    next: i64,
    remaining: u64,
    step: i64,
}

impl SegmentStream<'_> {
    fn pop(&mut self) -> Option<(BigInt, i64)> {
        if self.remaining == 0 {
            return None;
        }
        let t = self.next;
        self.remaining -= 1;
        self.next = self.next.wrapping_add(self.step);
        Some((self.poly.eval(&BigInt::from(t)), t))
    }
}

/// Cut `[-b, b]` into maximal runs on which `p` is monotone (consecutive
/// differences keeping one sign; a zero difference extends a nondecreasing
/// run). A degree-n polynomial produces at most n+1 runs.
fn monotone_segments<'a>(p: &'a IntPoly, b: i64) -> Vec<SegmentStream<'a>> {
    let mut out = Vec::new();
    let mut start = -b;
    let mut prev = p.eval(&BigInt::from(-b));
    let mut ascending: Option<bool> = None;
    for t in (-b + 1)..=b {
        let cur = p.eval(&BigInt::from(t));
        let up = cur >= prev;
        match ascending {
            None => ascending = Some(up),
            Some(dir) if dir == up => {}
            Some(dir) => {
                out.push(make_stream(p, start, t - 1, dir));
                start = t;
                ascending = Some(up);
            }
        }
        prev = cur;
    }
    out.push(make_stream(p, start, b, ascending.unwrap_or(true)));
    out
}

fn make_stream(p: &IntPoly, lo: i64, hi: i64, ascending: bool) -> SegmentStream<'_> {
    let len = (hi - lo) as u64 + 1;
    if ascending {
        SegmentStream {
            poly: p,
            next: lo,
            remaining: len,
            step: 1,
        }
    } else {
        SegmentStream {
            poly: p,
            next: hi,
            remaining: len,
            step: -1,
        }
    }
}

/// Merge a polynomial's segment streams into one nondecreasing value stream.
struct ValueStream<'a> {
    segments: Vec<SegmentStream<'a>>,
    heap: BinaryHeap<Reverse<(BigInt, i64, usize)>>,
}

impl<'a> ValueStream<'a> {
    fn new(p: &'a IntPoly, b: i64) -> Self {
        let mut segments = monotone_segments(p, b);
        let mut heap = BinaryHeap::new();
        for (i, seg) in segments.iter_mut().enumerate() {
            if let Some((v, t)) = seg.pop() {
                heap.push(Reverse((v, t, i)));
            }
        }
        ValueStream { segments, heap }
    }

    fn pop(&mut self) -> Option<(BigInt, i64)> {
        let Reverse((v, t, i)) = self.heap.pop()?;
        if let Some((nv, nt)) = self.segments[i].pop() {
            self.heap.push(Reverse((nv, nt, i)));
        }
        Some((v, t))
    }

    /// Pop the full run of arguments sharing the next value.
    fn pop_group(&mut self) -> Option<(BigInt, Vec<i64>)> {
        let (v, t) = self.pop()?;
        let mut args = vec![t];
        while let Some(Reverse((nv, _, _))) = self.heap.peek() {
            if *nv != v {
                break;
            }
            args.push(self.pop().expect("peeked").1);
        }
        Some((v, args))
    }
}

/// Sorted join over the two value streams. Memory O(deg f + deg g).
fn merge_join(f: &IntPoly, g: &IntPoly, b: i64) -> Vec<(i64, i64)> {
    let mut fs = ValueStream::new(f, b);
    let mut gs = ValueStream::new(g, b);
    let mut out = Vec::new();
    let mut fg = fs.pop_group();
    let mut gg = gs.pop_group();
    while let (Some((fv, fargs)), Some((gv, gargs))) = (&fg, &gg) {
        match fv.cmp(gv) {
            std::cmp::Ordering::Less => fg = fs.pop_group(),
            std::cmp::Ordering::Greater => gg = gs.pop_group(),
            std::cmp::Ordering::Equal => {
                for &x in fargs {
                    for &y in gargs {
                        out.push((x, y));
                    }
                }
                fg = fs.pop_group();
                gg = gs.pop_group();
            }
        }
    }
    out
}

/// Distribution of `x - y` over a solution set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapStats {
    /// `max |x - y|`; None for an empty solution set.
    pub max_gap: Option<u64>,
    /// Count of solutions per exact gap `x - y`.
    pub histogram: BTreeMap<i64, u64>,
}

pub fn xy_gap_stats(set: &SolutionSet) -> GapStats {
    let mut histogram = BTreeMap::new();
    let mut max_gap = None;
    for &(x, y) in set.solutions() {
        let gap = x - y;
        *histogram.entry(gap).or_insert(0) += 1;
        let mag = gap.unsigned_abs();
        if max_gap.map_or(true, |m| mag > m) {
            max_gap = Some(mag);
        }
    }
    GapStats { max_gap, histogram }
}

/// A factorization `f(n) = (n + a_1) ... (n + a_m)` with
/// `1 <= a_1 <= ... <= a_m`, recorded by its offsets `a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteCompositeWitness {
    pub n: u64,
    pub parts: Vec<BigInt>,
}

impl CompleteCompositeWitness {
    /// Check `prod (n + a_i) = f(n)`.
    pub fn verify(&self, f: &IntPoly) -> bool {
        let n = BigInt::from(self.n);
        let prod = self
            .parts
            .iter()
            .fold(BigInt::one(), |acc, a| acc * (&n + a));
        prod == f.eval(&n) && self.parts.iter().all(|a| a >= &BigInt::one())
    }
}

impl fmt::Display for CompleteCompositeWitness {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "f({}) = ", self.n)?;
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(out, " * ")?;
            }
            write!(out, "({} + {})", self.n, a)?;
        }
        Ok(())
    }
}

/// Decide whether `f(n)` splits as a product of `deg f` factors, each at
/// least `n + 1`. Requires monic `f` with nonnegative coefficients and
/// `n >= 1`. Returns the witness with the lexicographically least factor
/// tuple, or None.
///
/// The search is a divisor descent: pick divisors of `f(n)` in nondecreasing
/// order starting from `n + 1`, pruning a branch as soon as the remaining
/// quota of factors cannot reach the remaining quotient even using the
/// smallest admissible factor.
pub fn is_complete_composite(f: &IntPoly, n: u64) -> Result<Option<CompleteCompositeWitness>> {
    let m = match f.degree() {
        Degree::Finite(d) if d >= 1 => d,
        _ => return Err(Error::domain("f must be nonconstant")),
    };
    if !f.is_monic() {
        return Err(Error::domain("complete-composite analysis requires monic f"));
    }
    if (0..m).any(|i| f.coeff(i).is_negative()) {
        return Err(Error::domain(
            "complete-composite analysis requires nonnegative coefficients",
        ));
    }
    if n == 0 {
        return Err(Error::domain("n must be >= 1"));
    }
    let target = f.eval(&BigInt::from(n));
    let least = BigInt::from(n) + 1;
    let mut factors: Vec<BigInt> = Vec::with_capacity(m);
    if descend(&target, &least, m, &mut factors) {
        let n_big = BigInt::from(n);
        let parts = factors.iter().map(|d| d - &n_big).collect();
        Ok(Some(CompleteCompositeWitness { n, parts }))
    } else {
        Ok(None)
    }
}

/// Depth-first search for `remaining` divisors of `target`, each in
/// `[least, ...]` and nondecreasing, with product exactly `target`. Fills
/// `chosen` with the first (lexicographically least) solution found.
fn descend(target: &BigInt, least: &BigInt, remaining: usize, chosen: &mut Vec<BigInt>) -> bool {
    if remaining == 1 {
        if target >= least {
            chosen.push(target.clone());
            return true;
        }
        return false;
    }
    // Even the smallest admissible choice repeated must not overshoot.
    if least.pow(remaining as u32) > *target {
        return false;
    }
    let mut d = least.clone();
    loop {
        let d_power = d.pow(remaining as u32);
        if d_power > *target {
            return false;
        }
        if (target % &d).is_zero() {
            chosen.push(d.clone());
            if descend(&(target / &d), &d, remaining - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        d += 1;
    }
}

/// Outcome of scanning `1..=n_max` for complete-composite arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteScan {
    pub hits: Vec<u64>,
    /// True when `f` splits into monic linear factors with positive constant
    /// terms, which makes every `n >= 1` complete structurally.
    pub splits_structurally: bool,
    pub scanned: u64,
}

/// Scan `n = 1..=n_max` with [`is_complete_composite`] and report which
/// regime the results exhibit: the structural one (f a product of `x + a`
/// with `a >= 1`, every n a hit) or the sporadic one.
pub fn complete_numbers_scan(f: &IntPoly, n_max: u64) -> Result<CompleteScan> {
    if n_max == 0 {
        return Err(Error::domain("n_max must be >= 1"));
    }
    let splits_structurally = match crate::shift::splits_into_integer_linear_factors(f)? {
        Some(roots) => roots
            .pairs()
            .iter()
            .all(|(r, _)| r <= &BigInt::from(-1)),
        None => false,
    };
    let hits: Vec<u64> = (1..=n_max)
        .into_par_iter()
        .map(|n| is_complete_composite(f, n).map(|w| w.map(|_| n)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(CompleteScan {
        hits,
        splits_structurally,
        scanned: n_max,
    })
}

/// The least `h >= 0` for which every coefficient of `f(x + h)` is positive,
/// for monic `f`. Binary search over `[0, 1 + max |a_i|]`: positivity of all
/// coefficients is upward-closed in `h` (shifting further by a nonnegative
/// amount takes nonnegative combinations), and the upper end always
/// qualifies because it exceeds the Cauchy bound of every derivative of `f`.
pub fn minimal_positive_shift(f: &IntPoly) -> Result<BigInt> {
    let m = match f.degree() {
        Degree::Finite(d) if d >= 1 => d,
        _ => return Err(Error::domain("f must be nonconstant")),
    };
    if !f.is_monic() {
        return Err(Error::domain("minimal positive shift requires monic f"));
    }
    let all_positive = |h: &BigInt| {
        let shifted = f.taylor_shift(h);
        (0..=m).all(|i| shifted.coeff(i).is_positive())
    };
    let mut hi = (0..m)
        .map(|i| f.coeff(i).abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        + 1;
    debug_assert!(all_positive(&hi));
    let mut lo = BigInt::zero();
    // invariant: all_positive(hi), !all_positive(lo - 1) i.e. lo is a valid
    // lower bracket (h = -1 is out of range).
    if all_positive(&lo) {
        return Ok(lo);
    }
    while &lo + 1 < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if all_positive(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}
