//! The three generators of integer Heronian triangles with diameter at most
//! `n`, plus the merged [`Corpus`] type and cross-validation.
//!
//! * Algorithm I walks the ten-parameter form: for each side `a` and
//!   denominator part `w4`, every split `p * alpha * u * z = a * w4`, every
//!   `x^2 + y^2 = z`, and every `beta w1 v = x`, `gamma s t = y`.
//! * Algorithm II walks `m = 4A` and splits `m^2 = (p-c)(p+c)(c-q)(c+q)`
//!   with `p = a + b`, `q = a - b`.
//! * Algorithm III is the plain triple loop with a mod-420 residue filter and
//!   a squarefree-part test in place of big square roots. It emits exactly
//!   one representative per class and is the reference for the other two.
//!
//! Every generator is shardable over its outer loop variable; shard outputs
//! merge by set union.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heron::{canonicalize, HeronianTriangle, ParamOutcome, ParamTuple, Triangle};
use crate::numtheory::{
    combine_squarefree, divisors, for_each_ordered_factorization, is_perfect_square, isqrt,
    primes_up_to, sum_two_squares_factored, trial_factorize, Mod420Filter, SpfTable,
    SquarefreeTable, FILTER_MODULUS,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    I,
    II,
    III,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::I, Algorithm::II, Algorithm::III];

    /// Upper end of the outer loop for diameter bound `n`: `n` for I and
    /// III, `floor(sqrt(3 n^4))` for II.
    pub fn outer_limit(self, n: u64) -> u64 {
        match self {
            Algorithm::I | Algorithm::III => n,
            Algorithm::II => isqrt(3 * (n as u128).pow(4)) as u64,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::I => "i",
            Algorithm::II => "ii",
            Algorithm::III => "iii",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "i" | "1" => Ok(Algorithm::I),
            "ii" | "2" => Ok(Algorithm::II),
            "iii" | "3" => Ok(Algorithm::III),
            other => Err(Error::InvalidParameters(format!(
                "unknown algorithm {other:?}"
            ))),
        }
    }
}

/// Sorted, duplicate-free list of Heronian triangles, complete for all
/// diameters `<= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    n: u64,
    triangles: Vec<HeronianTriangle>,
}

impl Corpus {
    pub fn new(n: u64, mut triangles: Vec<HeronianTriangle>) -> Result<Self> {
        triangles.sort_unstable();
        triangles.dedup();
        if let Some(t) = triangles.iter().find(|t| t.diameter() > n) {
            return Err(Error::InvalidParameters(format!(
                "triangle {} exceeds diameter bound {n}",
                t.triangle()
            )));
        }
        Ok(Self { n, triangles })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn triangles(&self) -> &[HeronianTriangle] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Restriction to diameters `<= n`, itself complete.
    pub fn truncated(&self, n: u64) -> Corpus {
        let n = n.min(self.n);
        let end = self.triangles.partition_point(|t| t.diameter() <= n);
        Corpus {
            n,
            triangles: self.triangles[..end].to_vec(),
        }
    }

    /// Triangles whose longest side is exactly `d`.
    pub fn with_diameter(&self, d: u64) -> &[HeronianTriangle] {
        let lo = self.triangles.partition_point(|t| t.diameter() < d);
        let hi = self.triangles.partition_point(|t| t.diameter() <= d);
        &self.triangles[lo..hi]
    }

    pub fn into_triangles(self) -> Vec<HeronianTriangle> {
        self.triangles
    }
}

/// One accepted parameter state of Algorithm I, in parameter order.
#[derive(Clone, Copy, Debug)]
pub struct AcceptedState {
    pub a: u64,
    pub tuple: ParamTuple,
    pub sides: [u64; 3],
}

/// Algorithm I with its precomputed factor table (limit `16n`).
pub struct AlgorithmI {
    n: u64,
    spf: SpfTable,
}

impl AlgorithmI {
    pub fn new(n: u64) -> Result<Self> {
        Ok(Self {
            n,
            spf: SpfTable::new((16 * n).max(2))?,
        })
    }

    /// Runs the outer loop over `a` in `range`, handing every accepted state
    /// to `visit`.
    pub fn for_each_state(
        &self,
        range: RangeInclusive<u64>,
        mut visit: impl FnMut(&AcceptedState),
    ) {
        for a in range {
            if a >= 1 && a <= self.n {
                self.states_for(a, &mut visit);
            }
        }
    }

    pub fn run(&self, range: RangeInclusive<u64>) -> Vec<HeronianTriangle> {
        let mut found = BTreeSet::new();
        self.for_each_state(range, |st| {
            let [x, y, z] = st.sides;
            let tri = canonicalize(x, y, z).expect("accepted states are triangles");
            if tri.diameter() <= self.n {
                found.insert(tri);
            }
        });
        found.into_iter().map(to_heronian).collect()
    }

    fn states_for(&self, a: u64, visit: &mut impl FnMut(&AcceptedState)) {
        let fa = self.spf.factorize_unchecked(a);
        let a_divs = divisors(&fa);
        // w4 is coprime to i and divides i^2 + j^2, so 4 does not divide it
        // and its odd primes are 1 mod 4. With w4 | 8c that gives w4 <= 2c,
        // and a is the longest side.
        for w4 in 1..=2 * a {
            if w4 % 4 == 0 {
                continue;
            }
            let fw = self.spf.factorize_unchecked(w4);
            if fw.factors().iter().any(|&(p, _)| p % 4 == 3) {
                continue;
            }
            // w4 is coprime to p, alpha and u, hence divides z; the cofactor
            // z / w4 divides a.
            for &d in &a_divs {
                let d = d as u64;
                let fz = fw.mul(&self.spf.factorize_unchecked(d));
                if !fz.is_sum_of_two_squares() {
                    continue;
                }
                let reps = sum_two_squares_factored(&fz);
                if reps.is_empty() {
                    continue;
                }
                let mut paus = Vec::new();
                let rest = self.spf.factorize_unchecked(a / d);
                for_each_ordered_factorization(&rest, 3, None, |t| {
                    let (p, alpha, u) = (t[0] as u64, t[1] as u64, t[2] as u64);
                    if coprime(w4, p * alpha * u)
                        && coprime(p, u)
                        && coprime(alpha, u)
                        && self.squarefree(u)
                    {
                        paus.push((p, alpha, u));
                    }
                });
                if paus.is_empty() {
                    continue;
                }
                for &(x, y) in &reps {
                    if coprime(x, w4) {
                        self.split_rep(a, w4, &paus, x, y, visit);
                    }
                }
            }
        }
    }

    /// All `(beta, w1, v)` of `x` and `(gamma, s, t)` of `y` combined with
    /// every `(p, alpha, u)`.
    fn split_rep(
        &self,
        a: u64,
        w4: u64,
        paus: &[(u64, u64, u64)],
        x: u64,
        y: u64,
        visit: &mut impl FnMut(&AcceptedState),
    ) {
        // w1 is coprime to j and to u v^2; s t is coprime to i.
        let mut xs: Vec<[u64; 3]> = Vec::new();
        for_each_ordered_factorization(&self.spf.factorize_unchecked(x), 3, None, |t| {
            let (beta, w1, v) = (t[0] as u64, t[1] as u64, t[2] as u64);
            if coprime(w1, y) && coprime(w1, v) {
                xs.push([beta, w1, v]);
            }
        });
        let mut ys: Vec<[u64; 3]> = Vec::new();
        for_each_ordered_factorization(&self.spf.factorize_unchecked(y), 3, None, |t| {
            let (gamma, s, tt) = (t[0] as u64, t[1] as u64, t[2] as u64);
            if coprime(s * tt, x) && self.squarefree(s) {
                ys.push([gamma, s, tt]);
            }
        });
        // ascending gamma^2 s, so the c > 0 test can stop early
        ys.sort_unstable_by_key(|&[g, s, _]| (g as u128).pow(2) * s as u128);
        for &(p, alpha, u) in paus {
            for &[beta, w1, v] in &xs {
                if !(coprime(u * v, w1) && coprime(u * v, alpha) && coprime(p, w1 * v)) {
                    continue;
                }
                let lhs = (beta as u128) * (alpha as u128) * (w1 as u128).pow(2);
                for &[gamma, s, tt] in &ys {
                    // c > 0 needs beta alpha w1^2 > gamma^2 s u
                    if (gamma as u128).pow(2) * (s as u128) * (u as u128) >= lhs {
                        break;
                    }
                    if !(coprime(s * tt, u * v) && coprime(p, s * tt)) {
                        continue;
                    }
                    // with the coprimality above, the rest of the table reduces
                    // to w4 | (alpha w1 t)^2 + (gamma u v)^2 and gcd(h, i, j) = 1
                    let w = w4 as u128;
                    let e1 = (alpha as u128 * w1 as u128 % w) * tt as u128 % w;
                    let e2 = (gamma as u128 * u as u128 % w) * v as u128 % w;
                    if !(e1 * e1 + e2 * e2).is_multiple_of(w) {
                        continue;
                    }
                    let tuple = ParamTuple {
                        p,
                        w1,
                        w4,
                        s,
                        t: tt,
                        u,
                        v,
                        alpha,
                        beta,
                        gamma,
                    };
                    if tuple.h().gcd(&tuple.i()).gcd(&tuple.j()) != 1 {
                        continue;
                    }
                    debug_assert!(is_normalized(&tuple));
                    if let ParamOutcome::Sides(sides) = tuple.evaluate() {
                        debug_assert_eq!(sides[0], a);
                        if sides[1] <= a && sides[2] <= a {
                            visit(&AcceptedState { a, tuple, sides });
                        }
                    }
                }
            }
        }
    }

    fn squarefree(&self, m: u64) -> bool {
        self.spf.factorize_unchecked(m).is_squarefree()
    }
}

/// The normalization under which every Heronian triangle has exactly the
/// parameter shapes Algorithm I walks: `gcd(p, q) = gcd(h, i, j) = 1`,
/// pairwise coprime `w1, s t^2, u v^2, w4`, and the divisibility pattern of
/// each `w` against `h`, `i`, `i^2 + j^2`, `h^2 + j^2`.
pub fn is_normalized(pt: &ParamTuple) -> bool {
    let (h, i, j) = (pt.h(), pt.i(), pt.j());
    let w1 = pt.w1 as u128;
    let w2 = pt.s as u128 * (pt.t as u128).pow(2);
    let w3 = pt.u as u128 * (pt.v as u128).pow(2);
    let w4 = pt.w4 as u128;
    if h.gcd(&i).gcd(&j) != 1 {
        return false;
    }
    let ws = [w1, w2, w3, w4];
    for x in 0..4 {
        if (pt.p as u128).gcd(&ws[x]) != 1 {
            return false;
        }
        for y in x + 1..4 {
            if ws[x].gcd(&ws[y]) != 1 {
                return false;
            }
        }
    }
    // gcd(w, h^2 + j^2) and gcd(w, i^2 + j^2), reduced mod w first
    let g_sum = |w: u128, base: u128| -> u128 {
        let r = ((base % w).pow(2) + (j % w).pow(2)) % w;
        w.gcd(&r)
    };
    // w1 | h, w1 | i by construction
    if g_sum(w1, i) != 1 || g_sum(w1, h) != 1 {
        return false;
    }
    // w2 | h by construction
    if w2.gcd(&i) != 1 || g_sum(w2, i) != 1 || g_sum(w2, h) != w2 {
        return false;
    }
    // w3 | i by construction
    if w3.gcd(&h) != 1 || g_sum(w3, i) != w3 || g_sum(w3, h) != 1 {
        return false;
    }
    w4.gcd(&h) == 1 && w4.gcd(&i) == 1 && g_sum(w4, i) == w4 && g_sum(w4, h) == w4
}

/// Algorithm II with primes up to `sqrt(sqrt(3) n^2)` for trial division.
pub struct AlgorithmII {
    n: u64,
    primes: Vec<u64>,
}

impl AlgorithmII {
    pub fn new(n: u64) -> Self {
        let m_max = Algorithm::II.outer_limit(n);
        Self {
            n,
            primes: primes_up_to(isqrt(m_max as u128) as u64 + 1),
        }
    }

    /// Outer loop over `m = 4A` in `range`. Only multiples of 4 can occur
    /// since integer Heronian triangles have integral area.
    pub fn run(&self, range: RangeInclusive<u64>) -> Vec<HeronianTriangle> {
        let mut found = BTreeSet::new();
        let hi = *range.end().min(&Algorithm::II.outer_limit(self.n));
        let lo = (*range.start()).max(1).next_multiple_of(4);
        let mut m = lo;
        while m <= hi {
            self.splits(m, &mut |tri| {
                found.insert(tri);
            });
            m += 4;
        }
        found.into_iter().map(to_heronian).collect()
    }

    /// Every triangle with `4A = m` and diameter `<= n`, possibly repeated.
    pub fn splits(&self, m: u64, emit: &mut impl FnMut(Triangle)) {
        let n = self.n as u128;
        let fm = trial_factorize(m, &self.primes);
        let m2 = (m as u128) * (m as u128);
        let bound = 3 * n;
        let f2 = fm.squared();
        let divs: Vec<u128> = divisors(&f2)
            .into_iter()
            .take_while(|&d| d <= bound)
            .collect();
        // f1 = p - c, f2 = p + c: same parity, f2 > f1; then f3 = c - q and
        // f4 = c + q are the roots of X^2 - 2cX + m^2/(f1 f2).
        for (ix, &lo) in divs.iter().enumerate() {
            for &hi_f in &divs[ix + 1..] {
                if (hi_f - lo) % 2 != 0 {
                    continue;
                }
                let Some(prod) = lo.checked_mul(hi_f) else {
                    break;
                };
                if prod > m2 {
                    break;
                }
                if !m2.is_multiple_of(prod) {
                    continue;
                }
                let rest = m2 / prod;
                let c = (hi_f - lo) / 2;
                let p = (hi_f + lo) / 2;
                let Some(disc) = (c * c).checked_sub(rest) else {
                    continue;
                };
                let Some(q) = is_perfect_square(disc) else {
                    continue;
                };
                // q = a - b >= 0 without loss of generality
                if (p + q) % 2 != 0 || q >= p {
                    continue;
                }
                let a = (p + q) / 2;
                let b = (p - q) / 2;
                if a > n || c > n || b == 0 || c == 0 {
                    continue;
                }
                if let Ok(tri) = canonicalize(a as u64, b as u64, c as u64) {
                    debug_assert_eq!(tri.heron_product(), m2);
                    emit(tri);
                }
            }
        }
    }
}

/// Algorithm III with the mod-420 triple filter and a squarefree-part table
/// up to `3n`.
pub struct AlgorithmIII {
    n: u64,
    sfp: SquarefreeTable,
    filter: &'static Mod420Filter,
}

impl AlgorithmIII {
    pub fn new(n: u64) -> Result<Self> {
        Ok(Self {
            n,
            sfp: SquarefreeTable::new((3 * n).max(2))?,
            filter: Mod420Filter::shared(),
        })
    }

    pub fn run(&self, range: RangeInclusive<u64>) -> Vec<HeronianTriangle> {
        const M: u64 = FILTER_MODULUS as u64;
        let mut out = Vec::new();
        let lo = (*range.start()).max(1);
        let hi = (*range.end()).min(self.n);
        for a in lo..=hi {
            for b in (a + 2) / 2..=a {
                let row = (((a % M) * M + b % M) * M) as usize;
                let mut cm = (a + 1 - b) % M;
                for c in a + 1 - b..=b {
                    let pass = self.filter.accepts_index(row + cm as usize);
                    cm += 1;
                    if cm == M {
                        cm = 0;
                    }
                    if !pass {
                        continue;
                    }
                    let s12 = combine_squarefree(self.sfp.get(a + b + c), self.sfp.get(a + b - c));
                    let s34 = combine_squarefree(self.sfp.get(a + c - b), self.sfp.get(b + c - a));
                    if s12 == s34 {
                        let tri = canonicalize(a, b, c).expect("loop bounds give triangles");
                        out.push(to_heronian(tri));
                    }
                }
            }
        }
        out
    }
}

fn coprime(x: u64, y: u64) -> bool {
    x.gcd(&y) == 1
}

fn to_heronian(tri: Triangle) -> HeronianTriangle {
    let root =
        is_perfect_square(tri.heron_product()).expect("generator emitted a non-Heronian triple");
    HeronianTriangle::from_parts(tri, root as u64)
}

/// Splits `1..=limit` into `shards` contiguous, nearly equal ranges.
pub fn shard_ranges(limit: u64, shards: u64) -> Vec<RangeInclusive<u64>> {
    let shards = shards.clamp(1, limit.max(1));
    let base = limit / shards;
    let extra = limit % shards;
    let mut out = Vec::with_capacity(shards as usize);
    let mut start = 1;
    for i in 0..shards {
        let len = base + u64::from(i < extra);
        out.push(start..=start + len - 1);
        start += len;
    }
    out
}

/// Triangles produced by `algorithm` for outer-loop values in `range`.
/// Results from disjoint ranges union to the full set.
pub fn generate_range(
    algorithm: Algorithm,
    n: u64,
    range: RangeInclusive<u64>,
) -> Result<Vec<HeronianTriangle>> {
    if n < 1 {
        return Err(Error::InvalidParameters("n must be at least 1".into()));
    }
    let chunks = split_for_workers(range);
    let parts: Vec<Vec<HeronianTriangle>> = match algorithm {
        Algorithm::I => {
            let gen = AlgorithmI::new(n)?;
            chunks.into_par_iter().map(|r| gen.run(r)).collect()
        }
        Algorithm::II => {
            let gen = AlgorithmII::new(n);
            chunks.into_par_iter().map(|r| gen.run(r)).collect()
        }
        Algorithm::III => {
            let gen = AlgorithmIII::new(n)?;
            chunks.into_par_iter().map(|r| gen.run(r)).collect()
        }
    };
    let mut all: Vec<HeronianTriangle> = parts.into_iter().flatten().collect();
    all.sort_unstable();
    all.dedup();
    Ok(all)
}

fn split_for_workers(range: RangeInclusive<u64>) -> Vec<RangeInclusive<u64>> {
    let (lo, hi) = (*range.start(), *range.end());
    if hi < lo {
        return Vec::new();
    }
    let pieces = (rayon::current_num_threads() as u64 * 4).min(hi - lo + 1);
    shard_ranges(hi - lo + 1, pieces)
        .into_iter()
        .map(|r| r.start() + lo - 1..=r.end() + lo - 1)
        .collect()
}

pub fn generate(algorithm: Algorithm, n: u64) -> Result<Corpus> {
    let tris = generate_range(algorithm, n, 1..=algorithm.outer_limit(n))?;
    Corpus::new(n, tris)
}

pub fn generate_algorithm_i(n: u64) -> Result<Corpus> {
    generate(Algorithm::I, n)
}

pub fn generate_algorithm_ii(n: u64) -> Result<Corpus> {
    generate(Algorithm::II, n)
}

pub fn generate_algorithm_iii(n: u64) -> Result<Corpus> {
    generate(Algorithm::III, n)
}

/// Number of integer triangles `a >= b >= c`, `b + c > a`, `a <= n`. For a
/// fixed `a` there are `2b - a` choices of `c` for each `b > a/2`.
pub fn count_integer_triangles(n: u64) -> u128 {
    (1..=n as u128)
        .map(|a| {
            let lo = a / 2 + 1;
            let terms = a - lo + 1;
            // sum of 2b - a over b in [lo, a]
            (lo + a) * terms - a * terms
        })
        .sum()
}

/// Number of integer triangles that can be Heronian by parity alone: even
/// perimeter at most `max_perimeter` and not equilateral. There are
/// `round(p^2 / 48)` integer triangles of even perimeter `p`.
pub fn count_candidate_triangles(max_perimeter: u64) -> u128 {
    (2..=max_perimeter as u128)
        .step_by(2)
        .map(|p| (p * p + 24) / 48 - u128::from(p % 3 == 0))
        .sum()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgorithmRun {
    pub algorithm: Algorithm,
    pub total: usize,
    pub primitive: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrossValidation {
    pub n: u64,
    pub runs: Vec<AlgorithmRun>,
}

impl fmt::Display for CrossValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cross-validation n={}: all algorithms agree", self.n)?;
        for r in &self.runs {
            writeln!(
                f,
                "  algorithm {:>3}: {:>8} triangles, {:>8} primitive, {:.3}s",
                r.algorithm.to_string(),
                r.total,
                r.primitive,
                r.elapsed.as_secs_f64()
            )?;
        }
        Ok(())
    }
}

/// Runs all three generators and checks their outputs are identical, with
/// Algorithm III as the reference.
pub fn cross_validate(n: u64) -> Result<(CrossValidation, Corpus)> {
    let mut runs = Vec::new();
    let mut corpora = Vec::new();
    for alg in Algorithm::ALL {
        let start = Instant::now();
        let corpus = generate(alg, n)?;
        let elapsed = start.elapsed();
        runs.push(AlgorithmRun {
            algorithm: alg,
            total: corpus.len(),
            primitive: corpus
                .triangles()
                .iter()
                .filter(|t| t.is_primitive())
                .count(),
            elapsed,
        });
        corpora.push(corpus);
    }
    let reference = corpora.pop().expect("three runs");
    for (alg, other) in Algorithm::ALL.iter().zip(&corpora) {
        if let Some(detail) = first_difference(&reference, other) {
            return Err(Error::Mismatch {
                n,
                detail: format!("algorithm {alg} vs iii: {detail}"),
            });
        }
    }
    Ok((CrossValidation { n, runs }, reference))
}

/// Describes the first triangle on which two corpora differ.
pub fn first_difference(reference: &Corpus, other: &Corpus) -> Option<String> {
    let (x, y) = (reference.triangles(), other.triangles());
    let mut i = 0;
    while i < x.len() && i < y.len() && x[i] == y[i] {
        i += 1;
    }
    match (x.get(i), y.get(i)) {
        (None, None) => None,
        (Some(t), Some(u)) if t < u => Some(format!("{} missing", t.triangle())),
        (Some(_), Some(u)) => Some(format!("{} unexpected", u.triangle())),
        (Some(t), None) => Some(format!("{} missing", t.triangle())),
        (None, Some(u)) => Some(format!("{} unexpected", u.triangle())),
    }
}
