//! The reference corpus used by tests, the acceptance suite and `batch`.

use crate::builders::enumerate::{enumerate_by_type, TypeVector};
use crate::builders::families::{class_hypergroup, family_ring, fibonacci, group_ring, ising, near_group, rep_ring};
use crate::builders::groups::{abelian, catalog_group, cyclic, CATALOG};
use crate::hypergroup::FusionData;

/// Group rings, Rep-rings and class hypergroups of the catalog, near-group rings,
/// the `[[1, n²], [n, m]]` family and the rings of type `[1,1,1,1,2,2]`.
pub fn corpus() -> Vec<FusionData> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(group_ring(&cyclic(n)).with_name(format!("Z[C{n}]")));
    }
    out.push(group_ring(&abelian(&[2, 2])).with_name("Z[Z2^2]"));
    out.push(group_ring(&catalog_group("S3").unwrap()).with_name("Z[S3]"));
    for (name, _) in CATALOG {
        let g = catalog_group(name).unwrap();
        out.push(rep_ring(&g).expect("catalog Rep-rings build").with_name(format!("Rep({name})")));
        if !g.is_abelian() {
            out.push(class_hypergroup(&g).with_name(format!("Class({name})")));
        }
    }
    out.push(ising());
    out.push(fibonacci());
    for (order, m) in [(1, 0), (2, 1), (3, 0), (3, 3), (4, 2)] {
        out.push(near_group(&cyclic(order), m).unwrap().with_name(format!("K(C{order},{m})")));
    }
    for k in [2, 3, 5] {
        out.push(family_ring(2, &abelian(&[2, 2]), &cyclic(k)).unwrap().with_name(format!("Family(2,Z2^2,C{k})")));
    }
    out.push(family_ring(2, &cyclic(4), &cyclic(3)).unwrap().with_name("Family(2,C4,C3)"));
    let ty: TypeVector = "1,1,1,1,2,2".parse().unwrap();
    for (n, r) in enumerate_by_type(&ty, 10_000_000).unwrap().into_iter().enumerate() {
        out.push(r.with_name(format!("Type[1^4,2^2]#{}", n + 1)));
    }
    out
}
