//! Statistics over a complete corpus: equal-perimeter equal-area tuples,
//! rational medians and counts.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generate::Corpus;
use crate::heron::HeronianTriangle;
use crate::numtheory::is_perfect_square;

/// Pairwise distinct triangles sharing perimeter and area. Two similar
/// triangles with one perimeter coincide, so distinct side triples are
/// already non-similar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleGroup {
    pub perimeter: u64,
    pub area: u64,
    pub quad_area: u64,
    pub members: Vec<HeronianTriangle>,
}

/// Largest perimeter for which `corpus` holds every triangle: a triangle of
/// perimeter `p` has diameter below `p / 2`.
pub fn perimeter_bound(corpus: &Corpus) -> u64 {
    2 * corpus.n() + 1
}

/// All groups of size `>= 2` with perimeter within the complete range,
/// ordered by `(perimeter, area)`.
pub fn tuple_groups(corpus: &Corpus) -> Vec<TupleGroup> {
    grouped(corpus)
        .into_iter()
        .filter(|g| g.members.len() >= 2)
        .collect()
}

fn grouped(corpus: &Corpus) -> Vec<TupleGroup> {
    let bound = perimeter_bound(corpus);
    let mut map: BTreeMap<(u64, u64), Vec<HeronianTriangle>> = BTreeMap::new();
    for t in corpus.triangles() {
        if t.perimeter() <= bound {
            map.entry((t.perimeter(), t.quad_area()))
                .or_default()
                .push(*t);
        }
    }
    map.into_iter()
        .map(|((perimeter, quad_area), members)| TupleGroup {
            perimeter,
            area: quad_area / 4,
            quad_area,
            members,
        })
        .collect()
}

/// The group of at least `n_members` triangles with the smallest perimeter
/// (then smallest area). Fails with [`Error::Incomplete`] when no such group
/// exists within the perimeters the corpus covers.
pub fn minimal_tuples(corpus: &Corpus, n_members: usize) -> Result<TupleGroup> {
    if n_members == 0 {
        return Err(Error::InvalidParameters("N must be at least 1".into()));
    }
    grouped(corpus)
        .into_iter()
        .find(|g| g.members.len() >= n_members)
        .ok_or_else(|| {
            Error::Incomplete(format!(
                "no {n_members}-tuple with perimeter <= {}; a corpus with larger diameter is needed",
                perimeter_bound(corpus)
            ))
        })
}

/// Which medians of a triangle are rational. The median to side `a` is
/// `sqrt(2b^2 + 2c^2 - a^2) / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Medians {
    /// Medians to the sides in `sides()` order, when rational.
    pub values: [Option<Ratio<u64>>; 3],
}

impl Medians {
    pub fn count(&self) -> usize {
        self.values.iter().filter(|m| m.is_some()).count()
    }
}

pub fn rational_medians_of(a: u64, b: u64, c: u64) -> Medians {
    let m = |x: u64, y: u64, z: u64| -> Option<Ratio<u64>> {
        let v = 2 * (y as u128).pow(2) + 2 * (z as u128).pow(2);
        let v = v.checked_sub((x as u128).pow(2))?;
        is_perfect_square(v).map(|r| Ratio::new(r as u64, 2))
    };
    Medians {
        values: [m(a, b, c), m(b, c, a), m(c, a, b)],
    }
}

pub fn rational_medians(t: &HeronianTriangle) -> Medians {
    let [a, b, c] = t.sides();
    rational_medians_of(a, b, c)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MedianScan {
    /// Number of triangles with 0, 1, 2, 3 rational medians.
    pub histogram: [usize; 4],
    /// Primitive triangles with at least two rational medians.
    pub examples: Vec<(HeronianTriangle, Medians)>,
}

impl MedianScan {
    pub fn max_count(&self) -> usize {
        (0..4).rev().find(|&k| self.histogram[k] > 0).unwrap_or(0)
    }
}

pub fn median_scan(corpus: &Corpus) -> MedianScan {
    let mut scan = MedianScan::default();
    for t in corpus.triangles() {
        let m = rational_medians(t);
        scan.histogram[m.count()] += 1;
        if m.count() >= 2 && t.is_primitive() {
            scan.examples.push((*t, m));
        }
    }
    scan
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CorpusStats {
    pub n: u64,
    pub total: usize,
    pub primitive: usize,
    /// `diameter -> (total, primitive)` for diameters that occur.
    pub per_diameter: BTreeMap<u64, (usize, usize)>,
}

impl fmt::Display for CorpusStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "diameter <= {}: {} Heronian triangles, {} primitive",
            self.n, self.total, self.primitive
        )
    }
}

pub fn corpus_stats(corpus: &Corpus) -> CorpusStats {
    let mut stats = CorpusStats {
        n: corpus.n(),
        ..Default::default()
    };
    for t in corpus.triangles() {
        let prim = t.is_primitive();
        stats.total += 1;
        stats.primitive += usize::from(prim);
        let e = stats.per_diameter.entry(t.diameter()).or_default();
        e.0 += 1;
        e.1 += usize::from(prim);
    }
    stats
}
