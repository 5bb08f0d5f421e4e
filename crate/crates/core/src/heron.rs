//! Triangle domain model: Heron products, canonical side order, Heronian
//! membership, and the two parameterizations (Brahmagupta's and the
//! ten-parameter refinement driving the first generator).
//!
//! Areas are never computed through the semiperimeter. Everything goes
//! through `16A^2 = (a+b+c)(a+b-c)(a-b+c)(-a+b+c)`, which stays integral.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::numtheory::is_perfect_square;

/// Integer triangle with sides in descending order `a >= b >= c` and
/// `b + c > a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    a: u64,
    b: u64,
    c: u64,
}

impl Triangle {
    /// Sorts the sides descending; fails on a degenerate or impossible
    /// triple.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        canonicalize(a, b, c)
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn sides(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn diameter(&self) -> u64 {
        self.a
    }

    pub fn perimeter(&self) -> u64 {
        self.a + self.b + self.c
    }

    pub fn gcd(&self) -> u64 {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }

    pub fn scaled(&self, k: u64) -> Triangle {
        Triangle {
            a: self.a * k,
            b: self.b * k,
            c: self.c * k,
        }
    }

    pub fn heron_product(&self) -> u128 {
        heron_product(self.a, self.b, self.c)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

pub fn canonicalize(a: u64, b: u64, c: u64) -> Result<Triangle> {
    let mut s = [a, b, c];
    s.sort_unstable_by(|x, y| y.cmp(x));
    let [x, y, z] = s;
    if z == 0 || y + z <= x {
        return Err(Error::NotTriangle(a, b, c));
    }
    Ok(Triangle { a: x, b: y, c: z })
}

/// Heron product of the descending-sorted triple, so that all four factors
/// are nonnegative whenever the triangle inequality holds. Returns 0 for a
/// degenerate triple and also when the longest side exceeds the sum of the
/// other two (the sign is not representable in the unsigned result; use
/// [`classify`] to tell the cases apart).
pub fn heron_product(a: u64, b: u64, c: u64) -> u128 {
    let mut s = [a, b, c];
    s.sort_unstable_by(|x, y| y.cmp(x));
    let [x, y, z] = s.map(|v| v as u128);
    if y + z <= x {
        return 0;
    }
    (x + y + z) * (x + y - z) * (x - y + z) * (y + z - x)
}

/// Heronian triangle with its `quad_area = 4A`, whose square is the Heron
/// product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeronianTriangle {
    tri: Triangle,
    quad_area: u64,
}

impl HeronianTriangle {
    /// Trusted constructor for callers that already verified
    /// `quad_area^2 == heron_product`.
    pub(crate) fn from_parts(tri: Triangle, quad_area: u64) -> Self {
        debug_assert_eq!(
            (quad_area as u128) * (quad_area as u128),
            tri.heron_product()
        );
        Self { tri, quad_area }
    }

    /// Checked constructor from a triangle and its claimed `4A`.
    pub fn with_quad_area(tri: Triangle, quad_area: u64) -> Result<Self> {
        if quad_area == 0 || (quad_area as u128) * (quad_area as u128) != tri.heron_product() {
            return Err(Error::InvalidParameters(format!(
                "{tri} does not have 4A = {quad_area}"
            )));
        }
        Ok(Self { tri, quad_area })
    }

    pub fn triangle(&self) -> Triangle {
        self.tri
    }

    pub fn sides(&self) -> [u64; 3] {
        self.tri.sides()
    }

    pub fn quad_area(&self) -> u64 {
        self.quad_area
    }

    /// Integral area `A = quad_area / 4`.
    pub fn area(&self) -> u64 {
        self.quad_area / 4
    }

    pub fn is_primitive(&self) -> bool {
        self.tri.is_primitive()
    }

    pub fn diameter(&self) -> u64 {
        self.tri.a
    }

    pub fn perimeter(&self) -> u64 {
        self.tri.perimeter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    NotTriangle,
    NonHeronian,
    Heronian(HeronianTriangle),
}

impl Classification {
    pub fn heronian(self) -> Option<HeronianTriangle> {
        match self {
            Classification::Heronian(h) => Some(h),
            _ => None,
        }
    }

    pub fn is_heronian(&self) -> bool {
        matches!(self, Classification::Heronian(_))
    }
}

pub fn classify(a: u64, b: u64, c: u64) -> Classification {
    let Ok(tri) = canonicalize(a, b, c) else {
        return Classification::NotTriangle;
    };
    match is_perfect_square(tri.heron_product()) {
        Some(root) => Classification::Heronian(HeronianTriangle {
            tri,
            quad_area: root as u64,
        }),
        None => Classification::NonHeronian,
    }
}

/// Brahmagupta's parameters `(p, q, h, i, j)` with `ih > j^2` and
/// `gcd(p, q) = gcd(h, i, j) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrahmaguptaParams {
    pub p: u64,
    pub q: u64,
    pub h: u64,
    pub i: u64,
    pub j: u64,
}

impl BrahmaguptaParams {
    pub fn new(p: u64, q: u64, h: u64, i: u64, j: u64) -> Result<Self> {
        if [p, q, h, i, j].contains(&0) {
            return Err(Error::InvalidParameters(
                "parameters must be positive".into(),
            ));
        }
        if (i as u128) * (h as u128) <= (j as u128) * (j as u128) {
            return Err(Error::InvalidParameters("need ih > j^2".into()));
        }
        if p.gcd(&q) != 1 || h.gcd(&i).gcd(&j) != 1 {
            return Err(Error::InvalidParameters(
                "need gcd(p, q) = gcd(h, i, j) = 1".into(),
            ));
        }
        Ok(Self { p, q, h, i, j })
    }

    /// The exact rational sides `(a, b, c)` in parameter order.
    pub fn sides(&self) -> [Ratio<u128>; 3] {
        let (h, i, j) = (self.h as u128, self.i as u128, self.j as u128);
        let scale = Ratio::new(self.p as u128, self.q as u128);
        [
            scale * h * (i * i + j * j),
            scale * i * (h * h + j * j),
            scale * (i + h) * (i * h - j * j),
        ]
    }

    /// The sides as an integer triangle when all three are integral.
    pub fn triangle(&self) -> Option<Triangle> {
        let s = self.sides();
        if s.iter().any(|r| !r.is_integer()) {
            return None;
        }
        let [a, b, c] = s.map(|r| r.to_integer());
        canonicalize(
            u64::try_from(a).ok()?,
            u64::try_from(b).ok()?,
            u64::try_from(c).ok()?,
        )
        .ok()
    }
}

/// Ten-parameter form of a Brahmagupta solution: `h = alpha w1 s t^2`,
/// `i = beta w1 u v^2`, `j = gamma s t u v`, denominator split as
/// `q = w1 (s t^2) (u v^2) w4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParamTuple {
    pub p: u64,
    pub w1: u64,
    pub w4: u64,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub v: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

/// Outcome of evaluating a [`ParamTuple`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamOutcome {
    /// Positive integral sides in parameter order `(a, b, c)`.
    Sides([u64; 3]),
    NonIntegral,
    NonPositive,
    NotTriangle,
}

impl ParamTuple {
    pub fn h(&self) -> u128 {
        self.alpha as u128 * self.w1 as u128 * self.s as u128 * (self.t as u128).pow(2)
    }

    pub fn i(&self) -> u128 {
        self.beta as u128 * self.w1 as u128 * self.u as u128 * (self.v as u128).pow(2)
    }

    pub fn j(&self) -> u128 {
        self.gamma as u128 * self.s as u128 * self.t as u128 * self.u as u128 * self.v as u128
    }

    /// Brahmagupta denominator `w1 * s t^2 * u v^2 * w4`.
    pub fn q(&self) -> u128 {
        self.w1 as u128
            * self.s as u128
            * (self.t as u128).pow(2)
            * self.u as u128
            * (self.v as u128).pow(2)
            * self.w4 as u128
    }

    /// Structural invariants: positive entries, squarefree `s` and `u`,
    /// `ih > j^2`.
    pub fn check_invariants(&self) -> Result<()> {
        let all = [
            self.p, self.w1, self.w4, self.s, self.t, self.u, self.v, self.alpha, self.beta,
            self.gamma,
        ];
        if all.contains(&0) {
            return Err(Error::InvalidParameters(
                "parameters must be positive".into(),
            ));
        }
        if !is_squarefree(self.s) || !is_squarefree(self.u) {
            return Err(Error::InvalidParameters(
                "s and u must be squarefree".into(),
            ));
        }
        let (h, i, j) = (self.h(), self.i(), self.j());
        if i.checked_mul(h).is_some_and(|ih| ih <= j * j) {
            return Err(Error::InvalidParameters("need ih > j^2".into()));
        }
        Ok(())
    }

    /// Evaluates
    /// `a = p alpha u [(beta w1 v)^2 + (gamma s t)^2] / w4`,
    /// `b = p beta s [(alpha w1 t)^2 + (gamma u v)^2] / w4`,
    /// `c = p (beta u v^2 + alpha s t^2)(beta alpha w1^2 - gamma^2 s u) / w4`.
    pub fn evaluate(&self) -> ParamOutcome {
        let [p, w1, w4, s, t, u, v, al, be, ga] = [
            self.p, self.w1, self.w4, self.s, self.t, self.u, self.v, self.alpha, self.beta,
            self.gamma,
        ]
        .map(|x| x as u128);
        let x = be * w1 * v;
        let y = ga * s * t;
        let num_a = checked_prod(&[p, al, u]).and_then(|k| k.checked_mul(x * x + y * y));
        let bx = al * w1 * t;
        let by = ga * u * v;
        let num_b = checked_prod(&[p, be, s]).and_then(|k| k.checked_mul(bx * bx + by * by));
        let left = be * u * v * v + al * s * t * t;
        let pos = be * al * w1 * w1;
        let neg = ga * ga * s * u;
        if pos <= neg {
            return ParamOutcome::NonPositive;
        }
        let num_c = checked_prod(&[p, left, pos - neg]);
        let (Some(na), Some(nb), Some(nc)) = (num_a, num_b, num_c) else {
            return ParamOutcome::NonIntegral;
        };
        if na % w4 != 0 || nb % w4 != 0 || nc % w4 != 0 {
            return ParamOutcome::NonIntegral;
        }
        let sides = [na / w4, nb / w4, nc / w4];
        let Ok(sides) = sides
            .map(u64::try_from)
            .into_iter()
            .collect::<Result<Vec<_>, _>>()
        else {
            return ParamOutcome::NonIntegral;
        };
        let sides = [sides[0], sides[1], sides[2]];
        if canonicalize(sides[0], sides[1], sides[2]).is_err() {
            return ParamOutcome::NotTriangle;
        }
        ParamOutcome::Sides(sides)
    }
}

fn checked_prod(xs: &[u128]) -> Option<u128> {
    xs.iter().try_fold(1u128, |acc, &x| acc.checked_mul(x))
}

fn is_squarefree(mut m: u64) -> bool {
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return false;
            }
        }
        d += 1;
    }
    true
}

/// Evaluates a parameter tuple; see [`ParamTuple::evaluate`].
pub fn param_triangle(pt: &ParamTuple) -> ParamOutcome {
    pt.evaluate()
}

/// The denominator bound on a generated triangle of diameter at most `n`:
/// `w4 <= 8n` and `w4 | 8c`.
pub fn w4_bound_check(pt: &ParamTuple, n: u64) -> bool {
    match pt.evaluate() {
        ParamOutcome::Sides([_, _, c]) => pt.w4 <= 8 * n && (8 * c) % pt.w4 == 0,
        _ => false,
    }
}
