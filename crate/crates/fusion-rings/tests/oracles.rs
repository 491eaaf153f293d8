//! Library results against brute-force computations done here from first principles.

use std::collections::BTreeSet;
use std::f64::consts::TAU;

use num_complex::Complex64;

use fusion_rings::builders::families::{class_hypergroup, fibonacci, group_ring, near_group, rep_ring};
use fusion_rings::builders::groups::{abelian, catalog_group, cyclic, FiniteGroup, CATALOG};
use fusion_rings::builders::{enumerate_by_type, TypeVector};
use fusion_rings::dual::find_isomorphism;
use fusion_rings::galois::galois_orbits;
use fusion_rings::hypergroup::FusionData;
use fusion_rings::scalar::Scalar;
use fusion_rings::spectra::{character_table, fp_dimensions, Tolerance};

fn tol() -> Tolerance {
    Tolerance::default()
}

/// Conjugacy classes by direct search over the Cayley table.
fn brute_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order];
    let mut out = Vec::new();
    for a in 0..g.order {
        if seen[a] {
            continue;
        }
        let mut class = BTreeSet::new();
        for b in 0..g.order {
            class.insert(g.cayley[g.cayley[b][a]][g.inv(b)]);
        }
        for &c in &class {
            seen[c] = true;
        }
        out.push(class.into_iter().collect());
    }
    out
}

/// Structure constants of a fusion ring as an exact associativity check.
fn brute_associative(r: &FusionData) -> bool {
    let m = r.rank();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for e in 0..m {
                    let l: f64 = (0..m).map(|t| r.nf(a, b, t) * r.nf(t, c, e)).sum();
                    let rr: f64 = (0..m).map(|t| r.nf(b, c, t) * r.nf(a, t, e)).sum();
                    if (l - rr).abs() > 1e-9 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn rep_ring_degrees_match_class_count_and_group_order() {
    for (name, _) in CATALOG {
        let g = catalog_group(name).unwrap();
        let r = rep_ring(&g).unwrap();
        assert_eq!(r.rank(), brute_classes(&g).len(), "{name}");
        let d = fp_dimensions(&r, &tol()).unwrap();
        let sum: f64 = d.iter().map(|x| x * x).sum();
        assert!((sum - g.order as f64).abs() < 1e-9, "{name}: Σ d² = {sum}");
        for &x in &d {
            let xi = x.round() as usize;
            assert!((x - xi as f64).abs() < 1e-9 && g.order % xi == 0, "{name}: degree {x}");
        }
        let linear = (0..r.rank()).filter(|&i| d[i] < 1.5);
        let commutator_index = {
            let mut sub = BTreeSet::from([0usize]);
            for a in 0..g.order {
                for b in 0..g.order {
                    sub.insert(g.cayley[g.cayley[a][b]][g.inv(g.cayley[b][a])]);
                }
            }
            let mut grown = sub;
            loop {
                let next: BTreeSet<usize> = grown.iter().flat_map(|&x| grown.iter().map(move |&y| (x, y))).map(|(x, y)| g.cayley[x][y]).collect();
                if next == grown {
                    break;
                }
                grown = next;
            }
            g.order / grown.len()
        };
        assert_eq!(linear.count(), commutator_index, "{name}: linear characters vs |G/G'|");
    }
}

#[test]
fn cyclic_group_ring_table_is_roots_of_unity() {
    for n in 1..=8 {
        let r = group_ring(&cyclic(n));
        let t = character_table(&r, &tol()).unwrap();
        let mut want: Vec<Vec<Complex64>> =
            (0..n).map(|k| (0..n).map(|j| Complex64::from_polar(1.0, TAU * (j * k) as f64 / n as f64)).collect()).collect();
        for j in 0..n {
            let col = t.column(j);
            let pos = want.iter().position(|w| w.iter().zip(&col).all(|(a, b)| (a - b).norm() < 1e-9));
            let pos = pos.unwrap_or_else(|| panic!("C{n}: column {j} is not a character"));
            want.remove(pos);
        }
        assert!(t.codegrees.iter().all(|&c| (c - n as f64).abs() < 1e-9));
    }
}

#[test]
fn abelian_rep_ring_is_the_group_ring() {
    for orders in [&[2usize][..], &[6], &[2, 2], &[2, 4], &[3, 3], &[2, 2, 2]] {
        let g = abelian(orders);
        let r = rep_ring(&g).unwrap();
        assert!(find_isomorphism(&r, &group_ring(&g), &tol()).is_some(), "{orders:?}");
    }
}

#[test]
fn class_hypergroup_constants_by_counting() {
    for name in ["S3", "D4", "Q8", "A4", "D5", "SL(2,3)"] {
        let g = catalog_group(name).unwrap();
        let classes = brute_classes(&g);
        let m = classes.len();
        let class_of = |x: usize| classes.iter().position(|c| c.contains(&x)).unwrap();
        // (C_i/|C_i|)(C_j/|C_j|) has coefficient #{(a, b) ∈ C_i × C_j : ab ∈ C_k} / (|C_i||C_j|) on C_k/|C_k|.
        let mut entries = Vec::with_capacity(m * m * m);
        for i in 0..m {
            for j in 0..m {
                let mut counts = vec![0i64; m];
                for &a in &classes[i] {
                    for &b in &classes[j] {
                        counts[class_of(g.cayley[a][b])] += 1;
                    }
                }
                let den = (classes[i].len() * classes[j].len()) as i64;
                entries.extend(counts.iter().map(|&c| Scalar::ratio(c, den)));
            }
        }
        let involution: Vec<usize> = classes.iter().map(|c| class_of(g.inv(c[0]))).collect();
        let brute = FusionData::new(name.to_string(), involution, entries).unwrap();
        assert!(find_isomorphism(&class_hypergroup(&g), &brute, &tol()).is_some(), "{name}");
    }
}

#[test]
fn near_group_and_fibonacci_dimensions() {
    for (order, m) in [(1usize, 1i64), (2, 0), (2, 1), (3, 3), (4, 2), (5, 4)] {
        let r = near_group(&cyclic(order), m).unwrap();
        let d = fp_dimensions(&r, &tol()).unwrap();
        let g = order as f64;
        let want = (m as f64 + (m as f64 * m as f64 + 4.0 * g).sqrt()) / 2.0;
        assert!((d[r.rank() - 1] - want).abs() < 1e-9, "K(C{order},{m})");
    }
    let d = fp_dimensions(&fibonacci(), &tol()).unwrap();
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((d[1] - phi).abs() < 1e-12);
}

#[test]
fn small_types_count_like_groups() {
    for (ty, count) in [("1", 1), ("1,1", 1), ("1,1,1", 1), ("1,1,1,1", 2), ("1,1,2", 1), ("1,1,1,1,1", 1), ("1,1,1,1,1,1", 2)] {
        let ty: TypeVector = ty.parse().unwrap();
        let rings = enumerate_by_type(&ty, 10_000_000).unwrap();
        assert_eq!(rings.len(), count, "{ty:?}");
        assert!(rings.iter().all(brute_associative));
        for (a, x) in rings.iter().enumerate() {
            for y in &rings[a + 1..] {
                assert!(find_isomorphism(x, y, &tol()).is_none());
            }
        }
    }
}

#[test]
fn enumerated_rank_six_rings_are_associative() {
    let ty: TypeVector = "1,1,1,1,2,2".parse().unwrap();
    let rings = enumerate_by_type(&ty, 10_000_000).unwrap();
    assert_eq!(rings.len(), 4);
    assert!(rings.iter().all(brute_associative));
}

#[test]
fn cyclic_galois_orbits_follow_divisors() {
    let phi = |d: usize| (1..=d).filter(|&k| (1..=k).filter(|&g| k % g == 0 && d % g == 0).max() == Some(1)).count();
    for n in [1usize, 2, 5, 6, 8, 12, 15, 21, 23, 30] {
        let r = group_ring(&cyclic(n));
        let t = character_table(&r, &tol()).unwrap();
        let p = galois_orbits(&r, &t).unwrap();
        let mut got: Vec<usize> = p.orbits.iter().map(Vec::len).collect();
        let mut want: Vec<usize> = (1..=n).filter(|d| n % d == 0).map(phi).collect();
        got.sort_unstable();
        want.sort_unstable();
        assert_eq!(got, want, "C{n}");
    }
}
