//! Tetrahedra with integral edges, Cayley-Menger volumes, and the search for
//! perfect pyramids (integral edges, face areas and volume).
//!
//! Vertex model: `P1P2 = a`, `P2P3 = b`, `P1P3 = c`, `P3P4 = d`, `P1P4 = e`,
//! `P2P4 = f`. Faces are `(a,b,c)`, `(a,e,f)`, `(c,d,e)`, `(b,d,f)`; the
//! opposite edge pairs are `(a,d)`, `(b,e)`, `(c,f)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generate::Corpus;
use crate::heron::heron_product;
use crate::numtheory::is_perfect_square;

/// Vertex pairs of the six edges, in label order `a..f`.
pub const EDGE_VERTICES: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3)];

/// Edge indices of the four faces.
pub const FACES: [[usize; 3]; 4] = [[0, 1, 2], [0, 4, 5], [2, 3, 4], [1, 3, 5]];

const EDGE_NAMES: [char; 6] = ['a', 'b', 'c', 'd', 'e', 'f'];

fn edge_index(i: usize, j: usize) -> usize {
    let key = if i < j { (i, j) } else { (j, i) };
    EDGE_VERTICES
        .iter()
        .position(|&e| e == key)
        .expect("distinct vertices")
}

/// The 24 edge permutations induced by relabeling vertices. Entry `k` of a
/// permutation names the old edge that becomes edge `k`.
pub fn edge_permutations() -> &'static [[usize; 6]; 24] {
    static PERMS: OnceLock<[[usize; 6]; 24]> = OnceLock::new();
    PERMS.get_or_init(|| {
        let mut out = [[0usize; 6]; 24];
        let mut idx = 0;
        for s0 in 0..4 {
            for s1 in 0..4 {
                for s2 in 0..4 {
                    for s3 in 0..4 {
                        let s = [s0, s1, s2, s3];
                        if (0..4).any(|x| (x + 1..4).any(|y| s[x] == s[y])) {
                            continue;
                        }
                        for (k, &(i, j)) in EDGE_VERTICES.iter().enumerate() {
                            out[idx][k] = edge_index(s[i], s[j]);
                        }
                        idx += 1;
                    }
                }
            }
        }
        out
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tetrahedron {
    edges: [u64; 6],
}

impl Tetrahedron {
    /// Validates positivity, the strict triangle inequality on each face and
    /// embeddability (Cayley-Menger determinant `>= 0`).
    pub fn new(edges: [u64; 6]) -> Result<Self> {
        if edges.contains(&0) {
            return Err(Error::InvalidTetrahedron(edges, "edges must be positive"));
        }
        let t = Self { edges };
        for f in t.faces() {
            if heron_product(f[0], f[1], f[2]) == 0 {
                return Err(Error::InvalidTetrahedron(
                    edges,
                    "a face violates the triangle inequality",
                ));
            }
        }
        if t.cayley_menger().is_negative() {
            return Err(Error::InvalidTetrahedron(
                edges,
                "not embeddable in three dimensions",
            ));
        }
        Ok(t)
    }

    pub fn from_labels(a: u64, b: u64, c: u64, d: u64, e: u64, f: u64) -> Result<Self> {
        Self::new([a, b, c, d, e, f])
    }

    pub fn edges(&self) -> [u64; 6] {
        self.edges
    }

    pub fn faces(&self) -> [[u64; 3]; 4] {
        FACES.map(|f| f.map(|k| self.edges[k]))
    }

    pub fn diameter(&self) -> u64 {
        *self.edges.iter().max().expect("six edges")
    }

    pub fn gcd(&self) -> u64 {
        self.edges.iter().fold(0, |g, &x| g.gcd(&x))
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }

    pub fn scaled(&self, k: u64) -> Tetrahedron {
        Tetrahedron {
            edges: self.edges.map(|x| x * k),
        }
    }

    pub fn relabeled(&self, perm: &[usize; 6]) -> Tetrahedron {
        Tetrahedron {
            edges: perm.map(|k| self.edges[k]),
        }
    }

    /// `288 V^2` as the 3x3 Gram determinant with `P1` at the origin, or
    /// `None` if an intermediate leaves `i128`.
    pub fn cm288(&self) -> Option<i128> {
        let [a, b, c, d, e, f] = self.edges.map(|x| (x as i128) * (x as i128));
        let m11 = 2 * a;
        let m22 = 2 * c;
        let m33 = 2 * e;
        let m12 = a + c - b;
        let m13 = a + e - f;
        let m23 = c + e - d;
        let t1 = m11.checked_mul(m22.checked_mul(m33)?.checked_sub(m23.checked_mul(m23)?)?)?;
        let t2 = m12.checked_mul(m12.checked_mul(m33)?.checked_sub(m13.checked_mul(m23)?)?)?;
        let t3 = m13.checked_mul(m12.checked_mul(m23)?.checked_sub(m22.checked_mul(m13)?)?)?;
        t1.checked_sub(t2)?.checked_add(t3)
    }

    /// `288 V^2` in arbitrary precision.
    pub fn cayley_menger(&self) -> BigInt {
        match self.cm288() {
            Some(v) => BigInt::from(v),
            None => bordered_determinant(&self.simplex()),
        }
    }

    pub fn simplex(&self) -> SimplexDistances {
        let mut d = vec![0u128; 16];
        for (k, &(i, j)) in EDGE_VERTICES.iter().enumerate() {
            let sq = (self.edges[k] as u128).pow(2);
            d[i * 4 + j] = sq;
            d[j * 4 + i] = sq;
        }
        SimplexDistances { m: 3, d }
    }
}

impl fmt::Display for Tetrahedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g] = self.edges;
        write!(f, "({a},{b},{c},{d},{e},{g})")
    }
}

/// Lexicographically smallest edge tuple over the 24 vertex relabelings.
pub fn canonical_tetrahedron(t: &Tetrahedron) -> Tetrahedron {
    edge_permutations()
        .iter()
        .map(|p| t.relabeled(p))
        .min()
        .expect("24 relabelings")
}

/// Squared edge lengths of an `m`-simplex with vertices `0..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexDistances {
    m: usize,
    d: Vec<u128>,
}

impl SimplexDistances {
    pub fn new(m: usize, d: Vec<Vec<u128>>) -> Result<Self> {
        let k = m + 1;
        if m == 0 || d.len() != k || d.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidParameters(format!(
                "expected a {k}x{k} distance matrix"
            )));
        }
        for i in 0..k {
            if d[i][i] != 0 {
                return Err(Error::InvalidParameters("nonzero diagonal".into()));
            }
            for j in 0..k {
                if i != j && (d[i][j] == 0 || d[i][j] != d[j][i]) {
                    return Err(Error::InvalidParameters(
                        "off-diagonal entries must be positive and symmetric".into(),
                    ));
                }
            }
        }
        Ok(Self {
            m,
            d: d.into_iter().flatten().collect(),
        })
    }

    /// From integral edge lengths `len(i, j)` for `i < j`.
    pub fn from_lengths(m: usize, len: impl Fn(usize, usize) -> u64) -> Result<Self> {
        let k = m + 1;
        let mut d = vec![vec![0u128; k]; k];
        for i in 0..k {
            for j in i + 1..k {
                let sq = (len(i, j) as u128).pow(2);
                d[i][j] = sq;
                d[j][i] = sq;
            }
        }
        Self::new(m, d)
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> u128 {
        self.d[i * (self.m + 1) + j]
    }
}

/// Determinant of `D` bordered by a row and column `(0, 1, ..., 1)`.
pub fn bordered_determinant(sd: &SimplexDistances) -> BigInt {
    let k = sd.m + 2;
    let mut b: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| match (i, j) {
                    (0, 0) => BigInt::zero(),
                    (0, _) | (_, 0) => BigInt::one(),
                    _ => BigInt::from(sd.get(i - 1, j - 1)),
                })
                .collect()
        })
        .collect();
    bareiss(&mut b)
}

/// Fraction-free Gaussian elimination; consumes the matrix.
fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Exact `V_m^2 = (-1)^(m+1) / (2^m (m!)^2) * det B`. Negative values mean
/// the distances are not realizable; zero means a degenerate simplex.
pub fn cm_volume_squared(sd: &SimplexDistances) -> BigRational {
    let m = sd.m as u32;
    let fact: BigInt = (1..=sd.m as u64).map(BigInt::from).product();
    let denom = BigInt::from(2u8).pow(m) * &fact * &fact;
    let num = bordered_determinant(sd);
    let num = if m.is_multiple_of(2) { -num } else { num };
    BigRational::new(num, denom)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectPyramid {
    tet: Tetrahedron,
    face_areas: [u64; 4],
    volume: Ratio<u128>,
}

impl PerfectPyramid {
    pub fn tetrahedron(&self) -> Tetrahedron {
        self.tet
    }

    pub fn edges(&self) -> [u64; 6] {
        self.tet.edges
    }

    pub fn face_areas(&self) -> [u64; 4] {
        self.face_areas
    }

    pub fn surface(&self) -> u64 {
        self.face_areas.iter().sum()
    }

    pub fn volume(&self) -> Ratio<u128> {
        self.volume
    }

    /// The volume when it is an integer, which the theory guarantees.
    pub fn volume_integer(&self) -> Option<u128> {
        self.volume.is_integer().then(|| self.volume.to_integer())
    }

    pub fn is_primitive(&self) -> bool {
        self.tet.is_primitive()
    }

    pub fn canonical(&self) -> PerfectPyramid {
        let tet = canonical_tetrahedron(&self.tet);
        is_perfect_pyramid(&tet).expect("relabeling preserves perfection")
    }
}

fn face_area(x: u64, y: u64, z: u64) -> Option<u64> {
    let q = is_perfect_square(heron_product(x, y, z))?;
    if q == 0 {
        return None;
    }
    // q = 4A and 4 | q for integral sides
    Some((q / 4) as u64)
}

/// `Some` iff every face has integral area and the volume is rational and
/// positive.
pub fn is_perfect_pyramid(t: &Tetrahedron) -> Option<PerfectPyramid> {
    let faces = t.faces();
    let mut face_areas = [0u64; 4];
    for (slot, f) in face_areas.iter_mut().zip(faces) {
        *slot = face_area(f[0], f[1], f[2])?;
    }
    // V = sqrt(288 V^2 / 288) = sqrt(2 * cm) / 24
    let volume = match t.cm288() {
        Some(cm) => {
            if cm <= 0 {
                return None;
            }
            let root = is_perfect_square(2 * cm as u128)?;
            Ratio::new(root, 24)
        }
        None => {
            let cm = t.cayley_menger();
            if !cm.is_positive() {
                return None;
            }
            let twice: BigInt = cm * 2;
            let root = twice.sqrt();
            if &root * &root != twice {
                return None;
            }
            Ratio::new(root.to_u128()?, 24)
        }
    };
    Some(PerfectPyramid {
        tet: *t,
        face_areas,
        volume,
    })
}

/// Coincidence pattern label such as `3(vi)`: parameter count and case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coincidence {
    pub params: u8,
    pub case: u8,
}

const ROMAN: [&str; 9] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"];

/// Edge-equality patterns, one per configuration, grouped by parameter
/// count. Letters in one block are equal edges.
const PATTERNS: [&[&str]; 6] = [
    &["abcdef"],
    &["abcde,f", "abcd,ef", "acdf,be", "abc,def", "adf,bce"],
    &[
        "abcd,e,f", "acdf,b,e", "abc,de,f", "adf,bc,e", "adf,be,c", "ad,be,cf", "ae,bf,cd",
        "ab,c,def", "ad,bf,ce",
    ],
    &[
        "abc,d,e,f",
        "abd,c,e,f",
        "abf,c,d,e",
        "ad,be,c,f",
        "ad,bf,c,e",
        "ab,df,c,e",
        "ab,de,c,f",
    ],
    &["ad,b,c,e,f", "ab,c,d,e,f"],
    &["a,b,c,d,e,f"],
];

impl Coincidence {
    /// Every configuration in table order.
    pub fn all() -> Vec<Coincidence> {
        PATTERNS
            .iter()
            .enumerate()
            .flat_map(|(p, cases)| {
                (0..cases.len()).map(move |c| Coincidence {
                    params: p as u8 + 1,
                    case: c as u8 + 1,
                })
            })
            .collect()
    }

    /// The representative equality pattern, e.g. `ad,be,cf`.
    pub fn pattern(&self) -> &'static str {
        PATTERNS[self.params as usize - 1][self.case as usize - 1]
    }
}

impl fmt::Display for Coincidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.params, ROMAN[self.case as usize - 1])
    }
}

impl FromStr for Coincidence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Coincidence::all()
            .into_iter()
            .find(|c| c.to_string() == s.trim())
            .ok_or_else(|| Error::InvalidParameters(format!("unknown coincidence class {s:?}")))
    }
}

/// Restricted growth string of the equality pattern of six values.
fn equality_pattern<T: PartialEq>(vals: &[T; 6]) -> [u8; 6] {
    let mut out = [0u8; 6];
    let mut next = 0u8;
    for i in 0..6 {
        match (0..i).find(|&j| vals[j] == vals[i]) {
            Some(j) => out[i] = out[j],
            None => {
                out[i] = next;
                next += 1;
            }
        }
    }
    out
}

fn pattern_table() -> &'static HashMap<[u8; 6], Coincidence> {
    static TABLE: OnceLock<HashMap<[u8; 6], Coincidence>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = HashMap::new();
        for class in Coincidence::all() {
            let mut block = [0u8; 6];
            for (bi, part) in class.pattern().split(',').enumerate() {
                for ch in part.chars() {
                    let k = EDGE_NAMES
                        .iter()
                        .position(|&n| n == ch)
                        .expect("edge letter");
                    block[k] = bi as u8;
                }
            }
            for perm in edge_permutations() {
                let relabeled = perm.map(|k| block[k]);
                let prev = table.insert(equality_pattern(&relabeled), class);
                debug_assert!(
                    prev.is_none() || prev == Some(class),
                    "overlapping configurations"
                );
            }
        }
        table
    })
}

/// Which configuration of equal edges `t` realizes, up to relabeling.
pub fn classify_coincidence(t: &Tetrahedron) -> Coincidence {
    *pattern_table()
        .get(&equality_pattern(&t.edges))
        .expect("every equality pattern lies in some configuration")
}

/// Number of equality patterns of six edges covered by the table.
pub fn covered_patterns() -> usize {
    pattern_table().len()
}

/// The bucket map used by the hashed index.
pub type Phi = fn(u64, u64, usize) -> usize;

pub const DEFAULT_KAPPA: usize = 1 << 20;

pub fn default_phi(a: u64, b: u64, kappa: usize) -> usize {
    (a.wrapping_mul(2_654_435_761).wrapping_add(b) % kappa as u64) as usize
}

/// For a pair `(a, b)`, a sorted list containing at least every `c` that
/// makes `(a, b, c)` Heronian.
pub enum PairIndex {
    /// `kappa` buckets in compressed rows; a bucket mixes all pairs mapped
    /// to it.
    Hashed {
        kappa: usize,
        phi: Phi,
        offsets: Vec<u32>,
        values: Vec<u32>,
    },
    /// One exact list per pair.
    Exact(HashMap<(u32, u32), Vec<u32>>),
}

impl PairIndex {
    fn completions(corpus: &Corpus, n: u64) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        corpus
            .triangles()
            .iter()
            .take_while(move |t| t.diameter() <= n)
            .flat_map(|t| {
                let [x, y, z] = t.sides();
                [
                    (x, y, z),
                    (y, x, z),
                    (x, z, y),
                    (z, x, y),
                    (y, z, x),
                    (z, y, x),
                ]
            })
    }

    pub fn hashed(corpus: &Corpus, n: u64, kappa: usize, phi: Phi) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::InvalidParameters("kappa must be positive".into()));
        }
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); kappa];
        for (a, b, c) in Self::completions(corpus, n) {
            buckets[phi(a, b, kappa)].push(c as u32);
        }
        let mut offsets = Vec::with_capacity(kappa + 1);
        let mut values = Vec::new();
        offsets.push(0u32);
        for mut bucket in buckets {
            bucket.sort_unstable();
            bucket.dedup();
            values.extend_from_slice(&bucket);
            offsets.push(values.len() as u32);
        }
        Ok(PairIndex::Hashed {
            kappa,
            phi,
            offsets,
            values,
        })
    }

    pub fn exact(corpus: &Corpus, n: u64) -> Self {
        let mut map: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
        for (a, b, c) in Self::completions(corpus, n) {
            map.entry((a as u32, b as u32)).or_default().push(c as u32);
        }
        for list in map.values_mut() {
            list.sort_unstable();
            list.dedup();
        }
        PairIndex::Exact(map)
    }

    pub fn list(&self, a: u64, b: u64) -> &[u32] {
        match self {
            PairIndex::Hashed {
                kappa,
                phi,
                offsets,
                values,
            } => {
                let i = phi(a, b, *kappa);
                &values[offsets[i] as usize..offsets[i + 1] as usize]
            }
            PairIndex::Exact(map) => map.get(&(a as u32, b as u32)).map_or(&[], |v| v.as_slice()),
        }
    }
}

fn in_range(list: &[u32], lb: u64, ub: u64) -> &[u32] {
    let lo = list.partition_point(|&x| (x as u64) < lb);
    let hi = list.partition_point(|&x| (x as u64) <= ub);
    &list[lo..hi.max(lo)]
}

/// Every perfect pyramid with longest edge `<= n`, one canonical
/// representative per class.
///
/// For each longest edge `d` and each pair of Heronian triangles
/// `(d, a1, b1)`, `(d, a2, b2)` the last edge `x` is scanned over whichever
/// is shortest: the interval `[lb, ub]` or one of the two candidate lists.
pub fn search_perfect_pyramids(
    n: u64,
    corpus: &Corpus,
    index: &PairIndex,
) -> Result<Vec<PerfectPyramid>> {
    if corpus.n() < n {
        return Err(Error::Incomplete(format!(
            "corpus is complete to {} but the search needs {n}",
            corpus.n()
        )));
    }
    let found: BTreeSet<PerfectPyramid> = (1..=n)
        .into_par_iter()
        .map(|d| search_diameter(d, corpus, index))
        .reduce(BTreeSet::new, |mut x, y| {
            x.extend(y);
            x
        });
    Ok(found.into_iter().collect())
}

fn search_diameter(d: u64, corpus: &Corpus, index: &PairIndex) -> BTreeSet<PerfectPyramid> {
    let mut out = BTreeSet::new();
    let mut sides: Vec<(u64, u64)> = Vec::new();
    for t in corpus.with_diameter(d) {
        let [_, y, z] = t.sides();
        sides.push((y, z));
        if y != z {
            sides.push((z, y));
        }
    }
    for (i, &(a1, b1)) in sides.iter().enumerate() {
        for &(a2, b2) in &sides[i..] {
            let lb = a1.abs_diff(a2).max(b1.abs_diff(b2)) + 1;
            let ub = (a1 + a2 - 1).min(b1 + b2 - 1).min(d);
            if lb > ub {
                continue;
            }
            let width = (ub - lb + 1) as usize;
            let la = index.list(a1, a2);
            let lb_list = index.list(b1, b2);
            let mut check = |x: u64| {
                let tet = Tetrahedron {
                    edges: [d, b1, a1, x, a2, b2],
                };
                if let Some(p) = is_perfect_pyramid(&tet) {
                    out.insert(p.canonical());
                }
            };
            if width <= la.len() && width <= lb_list.len() {
                for x in lb..=ub {
                    check(x);
                }
            } else if la.len() <= lb_list.len() {
                for &x in in_range(la, lb, ub) {
                    check(x as u64);
                }
            } else {
                for &x in in_range(lb_list, lb, ub) {
                    check(x as u64);
                }
            }
        }
    }
    out
}

/// Convenience: builds the default hashed index and searches.
pub fn perfect_pyramids(n: u64, corpus: &Corpus) -> Result<Vec<PerfectPyramid>> {
    let index = PairIndex::hashed(corpus, n, DEFAULT_KAPPA, default_phi)?;
    search_perfect_pyramids(n, corpus, &index)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EqualKey {
    Surface,
    Volume,
    Both,
}

impl FromStr for EqualKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "surface" => Ok(EqualKey::Surface),
            "volume" => Ok(EqualKey::Volume),
            "both" => Ok(EqualKey::Both),
            other => Err(Error::InvalidParameters(format!("unknown key {other:?}"))),
        }
    }
}

/// Primitive pyramids sharing a key value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualGroup {
    pub surface: Option<u64>,
    pub volume: Option<Ratio<u128>>,
    pub members: Vec<PerfectPyramid>,
}

fn grouped(pyramids: &[PerfectPyramid], key: EqualKey) -> Vec<EqualGroup> {
    let mut map: BTreeMap<(u64, Ratio<u128>), Vec<PerfectPyramid>> = BTreeMap::new();
    for p in pyramids.iter().filter(|p| p.is_primitive()) {
        let k = match key {
            EqualKey::Surface => (p.surface(), Ratio::from_integer(0)),
            EqualKey::Volume => (0, p.volume()),
            EqualKey::Both => (p.surface(), p.volume()),
        };
        map.entry(k).or_default().push(*p);
    }
    map.into_iter()
        .map(|((s, v), mut members)| {
            members.sort_by_key(|p| p.volume());
            EqualGroup {
                surface: (key != EqualKey::Volume).then_some(s),
                volume: (key != EqualKey::Surface).then_some(v),
                members,
            }
        })
        .collect()
}

/// Groups of at least two primitive pyramids sharing the key, in increasing
/// key order.
pub fn mine_equal_sets(pyramids: &[PerfectPyramid], key: EqualKey) -> Vec<EqualGroup> {
    grouped(pyramids, key)
        .into_iter()
        .filter(|g| g.members.len() >= 2)
        .collect()
}

/// For `k = 1..=max_size`, the group of at least `k` primitive pyramids
/// with the smallest key value.
pub fn minimal_equal_sets(
    pyramids: &[PerfectPyramid],
    key: EqualKey,
    max_size: usize,
) -> Vec<EqualGroup> {
    let groups = grouped(pyramids, key);
    (1..=max_size)
        .filter_map(|k| groups.iter().find(|g| g.members.len() >= k).cloned())
        .collect()
}

/// A tetrahedron with edges in arithmetic progression, rational positive
/// volume and at least one Heronian face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ApTetrahedron {
    pub tet: Tetrahedron,
    pub start: u64,
    pub step: u64,
    pub heronian_faces: usize,
    pub volume: Ratio<u128>,
}

/// All such tetrahedra with longest edge `<= n`, one per relabeling class.
pub fn ap_tetrahedra(n: u64) -> Vec<ApTetrahedron> {
    let mut found = BTreeSet::new();
    for step in 1..=n / 5 {
        for start in 1..=n - 5 * step {
            let vals: [u64; 6] = std::array::from_fn(|k| start + k as u64 * step);
            for_each_permutation(vals, |edges| {
                let tet = Tetrahedron { edges };
                if tet
                    .faces()
                    .iter()
                    .any(|f| heron_product(f[0], f[1], f[2]) == 0)
                {
                    return;
                }
                let Some(cm) = tet.cm288() else { return };
                if cm <= 0 {
                    return;
                }
                let Some(root) = is_perfect_square(2 * cm as u128) else {
                    return;
                };
                let heronian_faces = tet
                    .faces()
                    .iter()
                    .filter(|f| face_area(f[0], f[1], f[2]).is_some())
                    .count();
                if heronian_faces == 0 {
                    return;
                }
                found.insert(ApTetrahedron {
                    tet: canonical_tetrahedron(&tet),
                    start,
                    step,
                    heronian_faces,
                    volume: Ratio::new(root, 24),
                });
            });
        }
    }
    found.into_iter().collect()
}

fn for_each_permutation(mut vals: [u64; 6], mut f: impl FnMut([u64; 6])) {
    // Heap's algorithm
    let mut c = [0usize; 6];
    f(vals);
    let mut i = 1;
    while i < 6 {
        if c[i] < i {
            if i % 2 == 0 {
                vals.swap(0, i);
            } else {
                vals.swap(c[i], i);
            }
            f(vals);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Sign of the top-dimensional volume of a candidate simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VolumeStatus {
    /// `V_m^2` is a positive rational square.
    Perfect,
    /// `V_m^2 > 0` but `V_m` is irrational.
    Irrational,
    Degenerate,
    NotEmbeddable,
}

/// A 4-simplex whose ten triangles and five tetrahedral facets are all
/// perfect. `edges[i][j]` is the length between vertices `i` and `j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplexCandidate {
    pub edges: [[u64; 5]; 5],
    pub status: VolumeStatus,
}

impl SimplexCandidate {
    pub fn distances(&self) -> SimplexDistances {
        SimplexDistances::from_lengths(4, |i, j| self.edges[i][j]).expect("positive lengths")
    }

    /// The five tetrahedral facets, each as an edge-labeled tetrahedron.
    pub fn facets(&self) -> [Tetrahedron; 5] {
        std::array::from_fn(|drop| {
            let vs: Vec<usize> = (0..5).filter(|&v| v != drop).collect();
            Tetrahedron {
                edges: EDGE_VERTICES.map(|(i, j)| self.edges[vs[i]][vs[j]]),
            }
        })
    }
}

fn volume_status(v2: &BigRational) -> VolumeStatus {
    if v2.is_zero() {
        return VolumeStatus::Degenerate;
    }
    if v2.is_negative() {
        return VolumeStatus::NotEmbeddable;
    }
    let square = |x: &BigInt| {
        let r = x.sqrt();
        &r * &r == *x
    };
    if square(v2.numer()) && square(v2.denom()) {
        VolumeStatus::Perfect
    } else {
        VolumeStatus::Irrational
    }
}

fn canonical_simplex(e: &[[u64; 5]; 5]) -> [[u64; 5]; 5] {
    let mut best: Option<[u64; 10]> = None;
    let mut best_perm = [0usize; 5];
    let mut perm = [0usize, 1, 2, 3, 4];
    permute5(&mut perm, 0, &mut |p| {
        let mut flat = [0u64; 10];
        let mut k = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                flat[k] = e[p[i]][p[j]];
                k += 1;
            }
        }
        if best.is_none_or(|b| flat < b) {
            best = Some(flat);
            best_perm = *p;
        }
    });
    std::array::from_fn(|i| std::array::from_fn(|j| e[best_perm[i]][best_perm[j]]))
}

fn permute5(p: &mut [usize; 5], k: usize, f: &mut impl FnMut(&[usize; 5])) {
    if k == 5 {
        f(p);
        return;
    }
    for i in k..5 {
        p.swap(k, i);
        permute5(p, k + 1, f);
        p.swap(k, i);
    }
}

/// 4-simplices with diameter `<= n` all of whose facets are perfect
/// pyramids, built by joining two pyramids along a common face and solving
/// for the tenth edge. Each is reported with the status of `V_4`.
pub fn search_higher_simplices(m: usize, n: u64, corpus: &Corpus) -> Result<Vec<SimplexCandidate>> {
    if m != 4 {
        return Err(Error::InvalidParameters(format!(
            "only m = 4 is supported, got {m}"
        )));
    }
    let pyramids = perfect_pyramids(n, corpus)?;
    let exact = PairIndex::exact(corpus, n);
    // labeled base face (01, 12, 02) -> apex edges (03, 13, 23)
    let mut by_face: HashMap<[u64; 3], BTreeSet<[u64; 3]>> = HashMap::new();
    for p in &pyramids {
        for perm in edge_permutations() {
            let [a, b, c, d, e, f] = p.tet.relabeled(perm).edges;
            by_face.entry([a, b, c]).or_default().insert([e, f, d]);
        }
    }
    let mut found = BTreeSet::new();
    for (&[e01, e12, e02], apexes) in &by_face {
        let apexes: Vec<[u64; 3]> = apexes.iter().copied().collect();
        for (i, &[e03, e13, e23]) in apexes.iter().enumerate() {
            for &[e04, e14, e24] in &apexes[i..] {
                for &x in exact.list(e03, e04) {
                    let x = x as u64;
                    let edges = [
                        [0, e01, e02, e03, e04],
                        [e01, 0, e12, e13, e14],
                        [e02, e12, 0, e23, e24],
                        [e03, e13, e23, 0, x],
                        [e04, e14, e24, x, 0],
                    ];
                    let mut cand = SimplexCandidate {
                        edges,
                        status: VolumeStatus::Degenerate,
                    };
                    if cand
                        .facets()
                        .iter()
                        .any(|t| is_perfect_pyramid(t).is_none())
                    {
                        continue;
                    }
                    cand.status = volume_status(&cm_volume_squared(&cand.distances()));
                    cand.edges = canonical_simplex(&cand.edges);
                    found.insert(cand);
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}
