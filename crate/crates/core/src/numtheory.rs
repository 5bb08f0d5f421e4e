//! Exact integer primitives: a smallest-prime-factor sieve, factorizations,
//! divisor and ordered-factorization enumeration, sums of two squares,
//! squarefree parts, and perfect-square detection with residue prefilters.
//!
//! Sides of triangles fit in `u64`; Heron products (at most `3n^4`) need
//! more than 64 bits once `n` passes ~50000, so everything touching them is
//! `u128`.

use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing
/// primes. The empty list is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from pairs, rejecting unsorted, repeated,
    /// zero-exponent or non-prime entries.
    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        let mut last = 1;
        for &(p, e) in &pairs {
            if p <= last || e == 0 || !is_prime_u64(p) {
                return Err(Error::InvalidParameters(format!(
                    "bad factorization entry ({p}, {e})"
                )));
            }
            last = p;
        }
        Ok(Self { factors: pairs })
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The factored value, or `None` if it does not fit in 128 bits.
    pub fn value(&self) -> Option<u128> {
        self.factors.iter().try_fold(1u128, |acc, &(p, e)| {
            (p as u128)
                .checked_pow(e)
                .and_then(|pe| acc.checked_mul(pe))
        })
    }

    /// Number of divisors, `prod(e_i + 1)`.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Product of two factorizations (merge of exponent lists).
    pub fn mul(&self, other: &Factorization) -> Factorization {
        let (x, y) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(x.len() + y.len());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(x[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(y[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((x[i].0, x[i].1 + y[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&x[i..]);
        out.extend_from_slice(&y[j..]);
        Factorization { factors: out }
    }

    pub fn squared(&self) -> Factorization {
        Factorization {
            factors: self.factors.iter().map(|&(p, e)| (p, 2 * e)).collect(),
        }
    }

    /// Whether the value is a sum of two squares: every prime `3 mod 4`
    /// appears to an even power.
    pub fn is_sum_of_two_squares(&self) -> bool {
        self.factors.iter().all(|&(p, e)| p % 4 != 3 || e % 2 == 0)
    }
}

/// Smallest-prime-factor table for `2..=limit`.
#[derive(Clone, Debug)]
pub struct SpfTable {
    spf: Vec<u32>,
}

impl SpfTable {
    pub fn new(limit: u64) -> Result<Self> {
        if limit > u32::MAX as u64 {
            return Err(Error::Resource(limit));
        }
        let limit = limit.max(2) as usize;
        let mut spf: Vec<u32> = Vec::new();
        spf.try_reserve_exact(limit + 1)
            .map_err(|_| Error::Resource(limit as u64))?;
        spf.resize(limit + 1, 0);
        let mut primes: Vec<u32> = Vec::new();
        for m in 2..=limit {
            if spf[m] == 0 {
                spf[m] = m as u32;
                primes.push(m as u32);
            }
            let sm = spf[m];
            for &p in &primes {
                let idx = p as usize * m;
                if p > sm || idx > limit {
                    break;
                }
                spf[idx] = p;
            }
        }
        Ok(Self { spf })
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Smallest prime factor of `m` for `2 <= m <= limit`.
    pub fn spf(&self, m: u64) -> Option<u64> {
        if m < 2 || m > self.limit() {
            None
        } else {
            Some(self.spf[m as usize] as u64)
        }
    }

    pub fn is_prime(&self, m: u64) -> bool {
        self.spf(m) == Some(m)
    }

    fn check(&self, m: u64) -> Result<()> {
        if m == 0 || m > self.limit() {
            Err(Error::OutOfRange {
                value: m,
                limit: self.limit(),
            })
        } else {
            Ok(())
        }
    }

    pub fn factorize(&self, m: u64) -> Result<Factorization> {
        self.check(m)?;
        Ok(self.factorize_unchecked(m))
    }

    pub(crate) fn factorize_unchecked(&self, mut m: u64) -> Factorization {
        let mut factors: Vec<(u64, u32)> = Vec::new();
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        Factorization { factors }
    }

    /// Product of the primes dividing `m` to an odd power.
    pub fn squarefree_part(&self, m: u64) -> Result<u64> {
        self.check(m)?;
        Ok(self
            .factorize_unchecked(m)
            .factors
            .iter()
            .filter(|&&(_, e)| e % 2 == 1)
            .map(|&(p, _)| p)
            .product())
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.spf
            .iter()
            .enumerate()
            .skip(2)
            .filter(|&(m, &p)| p as usize == m)
            .map(|(m, _)| m as u64)
    }
}

/// Dense table of squarefree parts for `1..=limit`, filled from an
/// [`SpfTable`] in one linear pass.
#[derive(Clone, Debug)]
pub struct SquarefreeTable {
    sfp: Vec<u32>,
}

impl SquarefreeTable {
    pub fn new(limit: u64) -> Result<Self> {
        let spf = SpfTable::new(limit)?;
        let len = spf.limit() as usize + 1;
        let mut sfp = vec![0u32; len];
        sfp[1] = 1;
        for m in 2..len {
            let p = spf.spf[m];
            let rest = sfp[m / p as usize];
            sfp[m] = if rest.is_multiple_of(p) { rest / p } else { rest * p };
        }
        Ok(Self { sfp })
    }

    pub fn limit(&self) -> u64 {
        (self.sfp.len() - 1) as u64
    }

    #[inline]
    pub fn get(&self, m: u64) -> u64 {
        self.sfp[m as usize] as u64
    }
}

/// `sfp(f1 * f2)` from `sfp(f1)` and `sfp(f2)`:
/// `s1 * s2 / gcd(s1, s2)^2`, evaluated without forming the full product.
#[inline]
pub fn combine_squarefree(s1: u64, s2: u64) -> u64 {
    let g = s1.gcd(&s2);
    (s1 / g) * (s2 / g)
}

/// Primes `<= limit` by a plain sieve of Eratosthenes.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Factors `m` by trial division. `primes` must contain every prime up to
/// `isqrt(m)`.
pub fn trial_factorize(mut m: u64, primes: &[u64]) -> Factorization {
    let mut factors = Vec::new();
    for &p in primes {
        if p * p > m {
            break;
        }
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Factorization { factors }
}

fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// All divisors in increasing order. Divisors that would overflow `u128`
/// cannot occur since they are bounded by the value itself; callers with
/// unrepresentable values get a panic from the multiplication.
pub fn divisors(f: &Factorization) -> Vec<u128> {
    let mut out = vec![1u128];
    for &(p, e) in f.factors() {
        let len = out.len();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p as u128;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

/// All ordered `k`-tuples of positive integers whose product is the value of
/// `f`.
pub fn ordered_factorizations(f: &Factorization, k: usize) -> Vec<Vec<u128>> {
    let mut out = Vec::new();
    for_each_ordered_factorization(f, k, None, |t| out.push(t.to_vec()));
    out
}

/// Visits every ordered `k`-tuple with product `f`, restricted to tuples in
/// which every entry is at most `bound` when one is given.
pub fn for_each_ordered_factorization<F: FnMut(&[u128])>(
    f: &Factorization,
    k: usize,
    bound: Option<u128>,
    visit: F,
) {
    assert!(k >= 1, "k must be positive");
    let Some(total) = f.value() else {
        panic!("factorization value exceeds 128 bits");
    };
    let mut walker = OrderedWalker {
        primes: f.factors().iter().map(|&(p, _)| p as u128).collect(),
        rem: f.factors().iter().map(|&(_, e)| e).collect(),
        bound: bound.unwrap_or(u128::MAX),
        prefix: Vec::with_capacity(k),
        visit,
    };
    walker.level(k, total);
}

struct OrderedWalker<F> {
    primes: Vec<u128>,
    rem: Vec<u32>,
    bound: u128,
    prefix: Vec<u128>,
    visit: F,
}

impl<F: FnMut(&[u128])> OrderedWalker<F> {
    fn level(&mut self, k_left: usize, remaining: u128) {
        if k_left == 1 {
            if remaining <= self.bound {
                self.prefix.push(remaining);
                (self.visit)(&self.prefix);
                self.prefix.pop();
            }
            return;
        }
        self.choose(0, 1, k_left, remaining);
    }

    fn choose(&mut self, idx: usize, cur: u128, k_left: usize, remaining: u128) {
        if idx == self.primes.len() {
            let rest = remaining / cur;
            // the remaining k_left - 1 entries are each <= bound
            let cap = saturating_pow(self.bound, (k_left - 1) as u32);
            if rest <= cap {
                self.prefix.push(cur);
                self.level(k_left - 1, rest);
                self.prefix.pop();
            }
            return;
        }
        let p = self.primes[idx];
        let max_e = self.rem[idx];
        let mut v = cur;
        for e in 0..=max_e {
            if e > 0 {
                v = match v.checked_mul(p) {
                    Some(v) if v <= self.bound => v,
                    _ => break,
                };
            }
            self.rem[idx] = max_e - e;
            self.choose(idx + 1, v, k_left, remaining);
        }
        self.rem[idx] = max_e;
    }
}

fn saturating_pow(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// Ordered pairs `(x, y)` of positive integers with `x^2 + y^2 = z`, by a
/// direct root test over `x <= sqrt(z / 2)`.
pub fn sum_two_squares(z: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let z = z as u128;
    let half = isqrt(z / 2);
    for x in 1..=half {
        if let Some(y) = is_perfect_square(z - x * x) {
            if y > 0 {
                out.push((x as u64, y as u64));
                if x != y {
                    out.push((y as u64, x as u64));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Same contract as [`sum_two_squares`], computed from the factorization by
/// multiplying Gaussian primes. Cost is proportional to the number of
/// representations rather than `sqrt(z)`.
pub fn sum_two_squares_factored(f: &Factorization) -> Vec<(u64, u64)> {
    if !f.is_sum_of_two_squares() {
        return Vec::new();
    }
    // Gaussian integers of norm z, one per associate class.
    let mut reps: Vec<(i128, i128)> = vec![(1, 0)];
    for &(p, e) in f.factors() {
        if p == 2 {
            for _ in 0..e {
                for r in reps.iter_mut() {
                    *r = gmul(*r, (1, 1));
                }
            }
        } else if p % 4 == 3 {
            let pk = (p as i128).pow(e / 2);
            for r in reps.iter_mut() {
                *r = (r.0 * pk, r.1 * pk);
            }
        } else {
            let (gx, gy) = gaussian_prime(p);
            let pi = (gx as i128, gy as i128);
            let conj = (pi.0, -pi.1);
            let mut next = Vec::with_capacity(reps.len() * (e as usize + 1));
            for k in 0..=e {
                let mut g = (1, 0);
                for _ in 0..k {
                    g = gmul(g, pi);
                }
                for _ in k..e {
                    g = gmul(g, conj);
                }
                for &r in &reps {
                    next.push(gmul(r, g));
                }
            }
            reps = next;
        }
    }
    let mut out = Vec::new();
    for (mut x, mut y) in reps {
        for _ in 0..4 {
            if x > 0 && y > 0 {
                out.push((x as u64, y as u64));
            }
            (x, y) = (-y, x);
        }
    }
    out.sort_unstable();
    out
}

fn gmul(a: (i128, i128), b: (i128, i128)) -> (i128, i128) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// `(x, y)` with `x^2 + y^2 = p` for a prime `p = 1 mod 4` (or `p = 2`),
/// via a square root of -1 and the Euclidean descent of Hermite-Serret.
pub fn gaussian_prime(p: u64) -> (u64, u64) {
    if p == 2 {
        return (1, 1);
    }
    debug_assert_eq!(p % 4, 1);
    let mut root = 0;
    for c in 2..p {
        let r = pow_mod(c, (p - 1) / 4, p);
        if (r as u128 * r as u128) % p as u128 == (p - 1) as u128 {
            root = r;
            break;
        }
    }
    let (mut r0, mut r1) = (p, root);
    while (r1 as u128) * (r1 as u128) > p as u128 {
        (r0, r1) = (r1, r0 % r1);
    }
    let x = r1;
    let y = isqrt((p - x * x) as u128) as u64;
    debug_assert_eq!(x * x + y * y, p);
    (x, y)
}

/// Number of integer pairs `(x, y)`, signs and zeros included, with
/// `x^2 + y^2 = z`: four times the excess of divisors `1 mod 4` over
/// divisors `3 mod 4`.
pub fn r2_count(z: u64) -> u64 {
    let mut ones: i64 = 0;
    let mut threes: i64 = 0;
    let mut tally = |d: u64| match d % 4 {
        1 => ones += 1,
        3 => threes += 1,
        _ => {}
    };
    let mut d = 1u64;
    while d * d <= z {
        if z.is_multiple_of(d) {
            tally(d);
            if d * d != z {
                tally(z / d);
            }
        }
        d += 1;
    }
    (4 * (ones - threes)) as u64
}

#[inline]
pub fn isqrt(v: u128) -> u128 {
    v.isqrt()
}

const fn residue_mask(m: u32) -> [bool; 128] {
    let mut table = [false; 128];
    let mut x = 0;
    while x < m {
        table[((x * x) % m) as usize] = true;
        x += 1;
    }
    table
}

const SQ_MOD_64: [bool; 128] = residue_mask(64);
const SQ_MOD_63: [bool; 128] = residue_mask(63);
const SQ_MOD_65: [bool; 128] = residue_mask(65);
const SQ_MOD_11: [bool; 128] = residue_mask(11);

/// Exact square test for any `u128`. Cheap quadratic-residue checks modulo
/// 64, 63, 65 and 11 reject most non-squares before the integer root.
#[inline]
pub fn is_perfect_square(v: u128) -> Option<u128> {
    if !SQ_MOD_64[(v & 63) as usize] {
        return None;
    }
    // 64 * 63 * 65 * 11 = 2882880 would do as one reduction; three small ones
    // are cheaper than a u128 division.
    let r = (v % (63 * 65 * 11)) as u32;
    if !SQ_MOD_63[(r % 63) as usize]
        || !SQ_MOD_65[(r % 65) as usize]
        || !SQ_MOD_11[(r % 11) as usize]
    {
        return None;
    }
    let root = isqrt(v);
    (root * root == v).then_some(root)
}

pub const FILTER_MODULUS: usize = 420;

/// Residue filter over `Z_420^3`: a triple passes iff the Heron product
/// `(a+b+c)(a+b-c)(a-b+c)(-a+b+c)` is a square residue modulo 420.
pub struct Mod420Filter {
    square: [bool; FILTER_MODULUS],
    bits: Vec<u64>,
}

impl Mod420Filter {
    pub fn new() -> Self {
        const M: usize = FILTER_MODULUS;
        let mut square = [false; M];
        for x in 0..M {
            square[x * x % M] = true;
        }
        let total = M * M * M;
        let mut bits = vec![0u64; total.div_ceil(64)];
        for a in 0..M {
            for b in 0..M {
                let base = (a * M + b) * M;
                for c in 0..M {
                    let f1 = (a + b + c) % M;
                    let f2 = (a + b + M - c) % M;
                    let f3 = (a + M - b + c) % M;
                    let f4 = (M - a + b + c) % M;
                    let prod = f1 * f2 % M * f3 % M * f4 % M;
                    if square[prod] {
                        let idx = base + c;
                        bits[idx >> 6] |= 1 << (idx & 63);
                    }
                }
            }
        }
        Self { square, bits }
    }

    /// Process-wide instance, built on first use (~9 MB).
    pub fn shared() -> &'static Mod420Filter {
        static FILTER: OnceLock<Mod420Filter> = OnceLock::new();
        FILTER.get_or_init(Mod420Filter::new)
    }

    pub fn is_square_residue(&self, r: u64) -> bool {
        self.square[(r % FILTER_MODULUS as u64) as usize]
    }

    #[inline]
    pub fn accepts(&self, a: u64, b: u64, c: u64) -> bool {
        const M: u64 = FILTER_MODULUS as u64;
        let idx = (((a % M) * M + b % M) * M + c % M) as usize;
        self.accepts_index(idx)
    }

    #[inline]
    pub(crate) fn accepts_index(&self, idx: usize) -> bool {
        self.bits[idx >> 6] >> (idx & 63) & 1 == 1
    }

    pub fn accepted_count(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn total_count(&self) -> u64 {
        (FILTER_MODULUS as u64).pow(3)
    }
}

impl Default for Mod420Filter {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fact(m: u64) -> Factorization {
        SpfTable::new(1000).unwrap().factorize(m).unwrap()
    }

    #[test]
    fn spf_examples() {
        let t = SpfTable::new(10).unwrap();
        assert_eq!(t.spf(9), Some(3));
        assert_eq!(t.spf(7), Some(7));
        assert_eq!(SpfTable::new(100).unwrap().spf(91), Some(7));
        assert_eq!(t.spf(11), None);
    }

    #[test]
    fn factorize_examples() {
        let t = SpfTable::new(600_000).unwrap();
        assert_eq!(t.factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert!(t.factorize(1).unwrap().is_one());
        assert_eq!(
            t.factorize(600_000).unwrap().factors(),
            &[(2, 6), (3, 1), (5, 5)]
        );
        assert!(matches!(
            t.factorize(600_001),
            Err(Error::OutOfRange { .. })
        ));
        assert!(t.factorize(0).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(&fact(12)), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&fact(1)), vec![1]);
        assert_eq!(divisors(&fact(25)), vec![1, 5, 25]);
    }

    #[test]
    fn ordered_factorization_examples() {
        let mut six = ordered_factorizations(&fact(6), 2);
        six.sort();
        assert_eq!(six, vec![vec![1, 6], vec![2, 3], vec![3, 2], vec![6, 1]]);
        assert_eq!(ordered_factorizations(&fact(1), 4), vec![vec![1, 1, 1, 1]]);
        // brute force over divisor triples
        let ds = divisors(&fact(12));
        let mut brute = 0;
        for &x in &ds {
            for &y in &ds {
                for &z in &ds {
                    if x * y * z == 12 {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(brute, 18);
        assert_eq!(ordered_factorizations(&fact(12), 3).len(), brute);
    }

    #[test]
    fn bounded_ordered_factorizations() {
        let f = fact(720);
        let mut got = Vec::new();
        for_each_ordered_factorization(&f, 3, Some(20), |t| got.push(t.to_vec()));
        let mut want: Vec<Vec<u128>> = ordered_factorizations(&f, 3)
            .into_iter()
            .filter(|t| t.iter().all(|&x| x <= 20))
            .collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn sum_two_squares_examples() {
        assert_eq!(sum_two_squares(5), vec![(1, 2), (2, 1)]);
        assert!(sum_two_squares(3).is_empty());
        assert_eq!(sum_two_squares(25), vec![(3, 4), (4, 3)]);
        assert_eq!(sum_two_squares(2), vec![(1, 1)]);
        assert_eq!(sum_two_squares_factored(&fact(25)), vec![(3, 4), (4, 3)]);
        assert_eq!(sum_two_squares_factored(&fact(1)), vec![]);
    }

    #[test]
    fn r2_examples() {
        assert_eq!(r2_count(1), 4);
        assert_eq!(r2_count(3), 0);
        // brute force over |x|, |y| <= 5
        let brute = (-5i64..=5)
            .flat_map(|x| (-5i64..=5).map(move |y| (x, y)))
            .filter(|&(x, y)| x * x + y * y == 25)
            .count() as u64;
        assert_eq!(brute, 12);
        assert_eq!(r2_count(25), brute);
    }

    #[test]
    fn squarefree_examples() {
        let t = SpfTable::new(1000).unwrap();
        assert_eq!(t.squarefree_part(12).unwrap(), 3);
        assert_eq!(t.squarefree_part(1).unwrap(), 1);
        let (s8, s18) = (
            t.squarefree_part(8).unwrap(),
            t.squarefree_part(18).unwrap(),
        );
        assert_eq!((s8, s18), (2, 2));
        assert_eq!(combine_squarefree(s8, s18), 1);
        assert_eq!(t.squarefree_part(144).unwrap(), 1);
        assert!(t.squarefree_part(1001).is_err());

        let dense = SquarefreeTable::new(1000).unwrap();
        for m in 1..=1000 {
            assert_eq!(dense.get(m), t.squarefree_part(m).unwrap(), "m={m}");
        }
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(576), Some(24));
        assert_eq!(is_perfect_square(575), None);
        assert_eq!(is_perfect_square(0), Some(0));
        // 3 * 600000^4 sized inputs
        let r: u128 = 600_000u128 * 600_000 * 1_732;
        assert_eq!(is_perfect_square(r * r), Some(r));
        assert_eq!(is_perfect_square(r * r + 1), None);
        assert_eq!(is_perfect_square(r * r - 1), None);
    }

    #[test]
    fn gaussian_primes() {
        for p in [5u64, 13, 17, 29, 37, 41, 1_000_000_009] {
            let (x, y) = gaussian_prime(p);
            assert_eq!(x as u128 * x as u128 + y as u128 * y as u128, p as u128);
        }
    }

    #[test]
    fn factorization_validation() {
        assert!(Factorization::from_pairs(vec![(2, 1), (3, 2)]).is_ok());
        assert!(Factorization::from_pairs(vec![(3, 1), (2, 1)]).is_err());
        assert!(Factorization::from_pairs(vec![(4, 1)]).is_err());
        assert!(Factorization::from_pairs(vec![(2, 0)]).is_err());
    }
}
