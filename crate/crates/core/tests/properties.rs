use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

use heronian::analysis::rational_medians_of;
use heronian::generate::{generate, Algorithm, AlgorithmI};
use heronian::geometry::{collinear, concyclic, Point};
use heronian::heron::{classify, heron_product, Classification};
use heronian::numtheory::{
    combine_squarefree, divisors, is_perfect_square, ordered_factorizations, r2_count,
    sum_two_squares, sum_two_squares_factored, Mod420Filter, SpfTable, SquarefreeTable,
};
use heronian::pyramid::{
    canonical_tetrahedron, cm_volume_squared, edge_permutations, is_perfect_pyramid, PairIndex,
    SimplexDistances, Tetrahedron,
};

fn naive_sfp(mut m: u64) -> u64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    out * m
}

#[test]
fn squarefree_part_of_products() {
    let table = SquarefreeTable::new(100_000).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..10_000 {
        let x = rng.gen_range(1..=100_000u64);
        let y = rng.gen_range(1..=100_000u64);
        let expected = naive_sfp(x * y);
        assert_eq!(
            combine_squarefree(table.get(x), table.get(y)),
            expected,
            "{x} * {y}"
        );
    }
}

#[test]
fn r2_matches_brute_force() {
    for z in 1..=10_000u64 {
        let mut brute = 0u64;
        let r = (z as f64).sqrt() as i64 + 1;
        for x in -r..=r {
            for y in -r..=r {
                if (x * x + y * y) as u64 == z {
                    brute += 1;
                }
            }
        }
        assert_eq!(r2_count(z), brute, "z={z}");
    }
}

#[test]
fn two_square_routes_agree() {
    let spf = SpfTable::new(20_000).unwrap();
    for z in 1..=20_000u64 {
        let direct = sum_two_squares(z);
        let factored = sum_two_squares_factored(&spf.factorize(z).unwrap());
        assert_eq!(direct, factored, "z={z}");
        // positive representations are r2 minus the axis points
        let axis = if is_perfect_square(z as u128).is_some() {
            4
        } else {
            0
        };
        assert_eq!(direct.len() as u64 * 4 + axis, r2_count(z), "z={z}");
    }
}

#[test]
fn heronian_quad_area_divisible_by_four() {
    let corpus = generate(Algorithm::III, 500).unwrap();
    for t in corpus.triangles() {
        assert_eq!(t.quad_area() % 4, 0, "{}", t.triangle());
    }
}

#[test]
fn filter_never_rejects_heronian() {
    let filter = Mod420Filter::shared();
    let corpus = generate(Algorithm::II, 400).unwrap();
    for t in corpus.triangles() {
        let [a, b, c] = t.sides();
        assert!(filter.accepts(a, b, c), "{}", t.triangle());
    }
}

#[test]
fn algorithm_iii_matches_brute_force() {
    let mut brute = BTreeSet::new();
    for a in 1..=80u64 {
        for b in 1..=a {
            for c in 1..=b {
                if b + c > a && is_perfect_square(heron_product(a, b, c)).is_some() {
                    brute.insert([a, b, c]);
                }
            }
        }
    }
    let got: BTreeSet<[u64; 3]> = generate(Algorithm::III, 80)
        .unwrap()
        .triangles()
        .iter()
        .map(|t| t.sides())
        .collect();
    assert_eq!(got, brute);
}

#[test]
fn w4_bounds_on_parameter_states() {
    let n = 200;
    let gen = AlgorithmI::new(n).unwrap();
    let mut states = 0;
    gen.for_each_state(1..=n, |st| {
        let c = st.sides[2];
        assert!(st.tuple.w4 <= 16 * st.a, "{:?}", st.tuple);
        assert_eq!((8 * c) % st.tuple.w4, 0, "{:?}", st.tuple);
        assert!(heronian::generate::is_normalized(&st.tuple));
        states += 1;
    });
    assert!(states > 0);
}

#[test]
fn planar_volume_is_heron_over_sixteen() {
    let corpus = generate(Algorithm::III, 200).unwrap();
    for t in corpus.triangles() {
        let [a, b, c] = t.sides();
        let lens = [[0, a, b], [a, 0, c], [b, c, 0]];
        let sd = SimplexDistances::from_lengths(2, |i, j| lens[i][j]).unwrap();
        let expected = BigRational::new(BigInt::from(heron_product(a, b, c)), BigInt::from(16));
        assert_eq!(cm_volume_squared(&sd), expected, "{}", t.triangle());
    }
}

#[test]
fn third_side_bound() {
    // number of c completing (a, b) is at most 4 tau(ab)^2
    let n = 300u64;
    let corpus = generate(Algorithm::III, 2 * n).unwrap();
    let index = PairIndex::exact(&corpus, 2 * n);
    let spf = SpfTable::new(n * n).unwrap();
    for a in 1..=n {
        for b in 1..=a {
            let count = index.list(a, b).len() as u64;
            if count == 0 {
                continue;
            }
            let tau = spf.factorize(a * b).unwrap().divisor_count();
            assert!(count <= 4 * tau * tau, "({a}, {b}): {count} > 4*{tau}^2");
        }
    }
}

#[test]
fn hashed_and_exact_index_agree() {
    for n in [200u64, 300] {
        let corpus = generate(Algorithm::III, n).unwrap();
        let exact = PairIndex::exact(&corpus, n);
        let default =
            PairIndex::hashed(&corpus, n, 1 << 20, heronian::pyramid::default_phi).unwrap();
        fn xor_phi(a: u64, b: u64, k: usize) -> usize {
            ((a << 7) ^ b.wrapping_mul(40503)) as usize % k
        }
        let coarse = PairIndex::hashed(&corpus, n, 97, xor_phi).unwrap();
        let r1 = heronian::pyramid::search_perfect_pyramids(n, &corpus, &exact).unwrap();
        let r2 = heronian::pyramid::search_perfect_pyramids(n, &corpus, &default).unwrap();
        let r3 = heronian::pyramid::search_perfect_pyramids(n, &corpus, &coarse).unwrap();
        assert_eq!(r1, r2, "n={n}");
        assert_eq!(r1, r3, "n={n}");
    }
}

#[test]
fn pyramid_scaling() {
    let t = Tetrahedron::new([117, 84, 51, 52, 53, 80]).unwrap();
    let p = is_perfect_pyramid(&t).unwrap();
    for k in 2..=5u64 {
        let q = is_perfect_pyramid(&t.scaled(k)).unwrap();
        assert_eq!(q.face_areas(), p.face_areas().map(|x| x * k * k));
        assert_eq!(q.volume(), p.volume() * (k as u128).pow(3));
        assert!(q.volume_integer().is_some());
    }
}

#[test]
fn tetrahedron_volume_routes_agree() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 500 {
        let e: [u64; 6] = std::array::from_fn(|_| rng.gen_range(1..=1000));
        let Ok(t) = Tetrahedron::new(e) else { continue };
        let generic =
            cm_volume_squared(&t.simplex()) * BigRational::from_integer(BigInt::from(288));
        assert_eq!(generic, BigRational::from_integer(t.cayley_menger()), "{t}");
        checked += 1;
    }
}

#[test]
fn ordered_factorization_counts() {
    // number of ordered k-factorizations is prod C(e + k - 1, k - 1)
    let spf = SpfTable::new(5000).unwrap();
    for m in 1..=5000u64 {
        let f = spf.factorize(m).unwrap();
        for k in 1..=3usize {
            let expected: u64 = f
                .factors()
                .iter()
                .map(|&(_, e)| (1..k as u64).fold(1u64, |acc, i| acc * (e as u64 + i) / i))
                .product();
            let got = ordered_factorizations(&f, k);
            assert_eq!(got.len() as u64, expected, "m={m} k={k}");
            assert!(got.iter().all(|t| t.iter().product::<u128>() == m as u128));
        }
        assert_eq!(divisors(&f).len() as u64, f.divisor_count());
    }
}

fn lattice_images(p: Point) -> [Point; 8] {
    let (x, y) = p;
    [
        (x, y),
        (-y, x),
        (-x, -y),
        (y, -x),
        (x, -y),
        (y, x),
        (-x, y),
        (-y, -x),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn factorization_multiplies_back(m in 1u64..2_000_000) {
        let spf = SpfTable::new(2_000_000).unwrap();
        let f = spf.factorize(m).unwrap();
        prop_assert_eq!(f.value(), Some(m as u128));
        prop_assert!(f.factors().iter().all(|&(p, _)| spf.is_prime(p)));
    }

    #[test]
    fn perfect_square_detection(x in 0u128..(1u128 << 45), d in 1u128..1000) {
        let sq = x * x;
        prop_assert_eq!(is_perfect_square(sq), Some(x));
        if x > 0 {
            prop_assert_eq!(is_perfect_square(sq + d.min(2 * x)), None);
        }
    }

    #[test]
    fn classify_is_symmetric(a in 1u64..400, b in 1u64..400, c in 1u64..400) {
        let base = classify(a, b, c);
        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            prop_assert_eq!(classify(x, y, z), base);
        }
    }

    #[test]
    fn scaling_preserves_heronian(a in 1u64..300, b in 1u64..300, c in 1u64..300, k in 2u64..20) {
        if let Classification::Heronian(t) = classify(a, b, c) {
            let s = classify(a * k, b * k, c * k).heronian().unwrap();
            prop_assert_eq!(s.quad_area(), t.quad_area() * k * k);
        } else {
            // a rational area stays rational under scaling and vice versa
            prop_assert!(!classify(a * k, b * k, c * k).is_heronian());
        }
    }

    #[test]
    fn collinear_concyclic_invariance(
        pts in prop::array::uniform4((-1000i64..1000, -1000i64..1000)),
        shift in (-100_000i64..100_000, -100_000i64..100_000),
        sym in 0usize..8,
    ) {
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| pts[i] != pts[j]));
        prop_assume!(distinct);
        let moved: Vec<Point> = pts.iter().map(|&p| {
            let (x, y) = lattice_images(p)[sym];
            (x + shift.0, y + shift.1)
        }).collect();
        prop_assert_eq!(collinear(pts[0], pts[1], pts[2]), collinear(moved[0], moved[1], moved[2]));
        let before = concyclic(pts[0], pts[1], pts[2], pts[3]);
        let after = concyclic(moved[0], moved[1], moved[2], moved[3]);
        prop_assert_eq!(before.is_ok(), after.is_ok());
        if let (Ok(x), Ok(y)) = (before, after) {
            prop_assert_eq!(x, y);
            let swapped = concyclic(pts[3], pts[1], pts[0], pts[2]).unwrap();
            prop_assert_eq!(x, swapped);
        }
    }

    #[test]
    fn circle_points_are_concyclic(k in 1i64..50, i in 0usize..12, j in 0usize..12, l in 0usize..12, m in 0usize..12) {
        // lattice points on x^2 + y^2 = (5k)^2
        let r = 5 * k;
        let on: [Point; 12] = [(r, 0), (0, r), (-r, 0), (0, -r), (3 * k, 4 * k), (4 * k, 3 * k),
            (-3 * k, 4 * k), (-4 * k, -3 * k), (3 * k, -4 * k), (-4 * k, 3 * k), (4 * k, -3 * k), (-3 * k, -4 * k)];
        let idx = [i, j, l, m];
        prop_assume!((0..4).all(|x| (x + 1..4).all(|y| idx[x] != idx[y])));
        prop_assert!(concyclic(on[i], on[j], on[l], on[m]).unwrap());
    }

    #[test]
    fn median_flags_follow_relabeling(a in 1u64..2000, b in 1u64..2000, c in 1u64..2000) {
        let m = rational_medians_of(a, b, c);
        let r = rational_medians_of(b, c, a);
        prop_assert_eq!(m.count(), r.count());
        prop_assert_eq!(r.values, [m.values[1], m.values[2], m.values[0]]);
    }

    #[test]
    fn canonical_orbit(e in prop::array::uniform6(1u64..30)) {
        if let Ok(t) = Tetrahedron::new(e) {
            let c = canonical_tetrahedron(&t);
            prop_assert_eq!(canonical_tetrahedron(&c), c);
            let orbit: BTreeSet<[u64; 6]> = edge_permutations().iter().map(|p| t.relabeled(p).edges()).collect();
            prop_assert_eq!(24 % orbit.len(), 0);
            prop_assert_eq!(orbit.iter().next().copied(), Some(c.edges()));
            prop_assert_eq!(is_perfect_pyramid(&t).is_some(), is_perfect_pyramid(&c).is_some());
        }
    }

    #[test]
    fn gcd_scaling_of_sfp(x in 1u64..50_000, y in 1u64..50_000) {
        let g = x.gcd(&y);
        prop_assert_eq!(combine_squarefree(naive_sfp(x), naive_sfp(y)), naive_sfp(x / g * (y / g)));
    }
}
