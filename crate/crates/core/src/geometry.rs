//! Lattice point sets with integral pairwise distances: the checks that make
//! a set an n2-cluster (integral distances, no three points on a line, no
//! four on a circle).

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::is_perfect_square;

pub type Point = (i64, i64);

/// Coordinates up to this magnitude keep every product below in range.
pub const COORD_LIMIT: i64 = 1 << 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePointSet {
    points: Vec<Point>,
}

impl LatticePointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        for &p in &points {
            if p.0.abs() > COORD_LIMIT || p.1.abs() > COORD_LIMIT {
                return Err(Error::InvalidPointSet(format!(
                    "{p:?} exceeds the coordinate limit"
                )));
            }
            if !seen.insert(p) {
                return Err(Error::InvalidPointSet(format!("duplicate point {p:?}")));
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Parses one `x y` pair per line; blank lines and `#` comments are
    /// skipped. Errors name the 1-based line.
    pub fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut points = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |message: String| Error::Parse {
                path: path.to_path_buf(),
                line: idx + 1,
                message,
            };
            let mut it = line.split_whitespace();
            let (Some(x), Some(y), None) = (it.next(), it.next(), it.next()) else {
                return Err(bad(format!("expected `x y`, found {line:?}")));
            };
            let x: i64 = x
                .parse()
                .map_err(|e| bad(format!("bad x coordinate {x:?}: {e}")))?;
            let y: i64 = y
                .parse()
                .map_err(|e| bad(format!("bad y coordinate {y:?}: {e}")))?;
            points.push((x, y));
        }
        Self::new(points).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            line: 0,
            message: e.to_string(),
        })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, path)
    }
}

pub fn squared_distance(p: Point, q: Point) -> u128 {
    let dx = (p.0 as i128 - q.0 as i128).unsigned_abs();
    let dy = (p.1 as i128 - q.1 as i128).unsigned_abs();
    dx * dx + dy * dy
}

/// The distance when it is an integer.
pub fn integral_distance(p: Point, q: Point) -> Option<u64> {
    is_perfect_square(squared_distance(p, q)).map(|d| d as u64)
}

pub fn collinear(p: Point, q: Point, r: Point) -> bool {
    let (ax, ay) = (q.0 as i128 - p.0 as i128, q.1 as i128 - p.1 as i128);
    let (bx, by) = (r.0 as i128 - p.0 as i128, r.1 as i128 - p.1 as i128);
    ax * by == ay * bx
}

/// Whether four points lie on one circle: the determinant with rows
/// `(x, y, x^2 + y^2, 1)` vanishes. Errors if three of them are collinear.
pub fn concyclic(p: Point, q: Point, r: Point, s: Point) -> Result<bool> {
    let pts = [p, q, r, s];
    for i in 0..4 {
        for j in i + 1..4 {
            for k in j + 1..4 {
                if collinear(pts[i], pts[j], pts[k]) {
                    return Err(Error::Collinear(pts[i], pts[j], pts[k]));
                }
            }
        }
    }
    Ok(concyclic_det(&pts).is_zero())
}

fn concyclic_det(pts: &[Point; 4]) -> BigInt {
    // translate by the first point to get a 3x3 minor
    let rows: Vec<[BigInt; 3]> = pts[1..]
        .iter()
        .map(|&(x, y)| {
            let dx = BigInt::from(x as i128 - pts[0].0 as i128);
            let dy = BigInt::from(y as i128 - pts[0].1 as i128);
            let w = &dx * &dx + &dy * &dy;
            [dx, dy, w]
        })
        .collect();
    let m = |i: usize, j: usize| &rows[i][j];
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

/// All violations of the n2-cluster conditions, with 1-based point indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterReport {
    pub non_integral_pairs: Vec<(usize, usize)>,
    pub collinear_triples: Vec<(usize, usize, usize)>,
    pub concyclic_quadruples: Vec<[usize; 4]>,
    /// Distances, `None` where not integral.
    pub distance_matrix: Vec<Vec<Option<u64>>>,
}

impl ClusterReport {
    pub fn is_cluster(&self) -> bool {
        self.non_integral_pairs.is_empty()
            && self.collinear_triples.is_empty()
            && self.concyclic_quadruples.is_empty()
    }
}

impl fmt::Display for ClusterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "distance matrix:")?;
        for row in &self.distance_matrix {
            let cells: Vec<String> = row
                .iter()
                .map(|d| d.map_or_else(|| "-".to_string(), |v| v.to_string()))
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        writeln!(f, "non-integral pairs: {}", self.non_integral_pairs.len())?;
        for (i, j) in &self.non_integral_pairs {
            writeln!(f, "  {{{i},{j}}}")?;
        }
        writeln!(f, "collinear triples: {}", self.collinear_triples.len())?;
        for (i, j, k) in &self.collinear_triples {
            writeln!(f, "  {{{i},{j},{k}}}")?;
        }
        writeln!(
            f,
            "concyclic quadruples: {}",
            self.concyclic_quadruples.len()
        )?;
        for [i, j, k, l] in &self.concyclic_quadruples {
            writeln!(f, "  {{{i},{j},{k},{l}}}")?;
        }
        write!(
            f,
            "{}",
            if self.is_cluster() {
                "valid cluster"
            } else {
                "not a cluster"
            }
        )
    }
}

pub fn verify_cluster(ps: &LatticePointSet) -> ClusterReport {
    let pts = ps.points();
    let n = pts.len();
    let mut distance_matrix = vec![vec![Some(0); n]; n];
    let mut non_integral_pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = integral_distance(pts[i], pts[j]);
            distance_matrix[i][j] = d;
            distance_matrix[j][i] = d;
            if d.is_none() {
                non_integral_pairs.push((i + 1, j + 1));
            }
        }
    }
    let mut collinear_triples = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if collinear(pts[i], pts[j], pts[k]) {
                    collinear_triples.push((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    let mut concyclic_quadruples = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    // a circle through three collinear points does not exist
                    let quad = [pts[i], pts[j], pts[k], pts[l]];
                    let has_line = (0..4).any(|x| {
                        (x + 1..4).any(|y| (y + 1..4).any(|z| collinear(quad[x], quad[y], quad[z])))
                    });
                    if !has_line && concyclic_det(&quad).is_zero() {
                        concyclic_quadruples.push([i + 1, j + 1, k + 1, l + 1]);
                    }
                }
            }
        }
    }
    ClusterReport {
        non_integral_pairs,
        collinear_triples,
        concyclic_quadruples,
        distance_matrix,
    }
}
