//! Brute-force check that the three generator families really span the
//! sigma*-fixed subset of RG, on every instance small enough to enumerate the
//! whole module.

use std::sync::Arc;

use sigmastar_core::{
    catalog, enumerate_involutions, enumerate_orientations, is_compatible, parse_ring_token,
    symmetric_generators, FiniteRing, Group, GroupRingElement,
};

fn all_vectors(g: &Arc<Group>, r: &Arc<FiniteRing>) -> Vec<Vec<usize>> {
    let n = g.order();
    let size = r.size();
    let total = size.pow(n as u32);
    (0..total)
        .map(|code| {
            let mut c = code;
            (0..n)
                .map(|_| {
                    let v = c % size;
                    c /= size;
                    v
                })
                .collect()
        })
        .collect()
}

fn span_of(items: &[GroupRingElement], g: &Arc<Group>, r: &Arc<FiniteRing>) -> Vec<Vec<usize>> {
    let mut span: Vec<Vec<usize>> = vec![vec![r.zero(); g.order()]];
    for gen in items {
        let mut next = Vec::new();
        for coeffs in &span {
            let base =
                GroupRingElement::from_coeffs(Arc::clone(g), Arc::clone(r), coeffs.clone())
                    .unwrap();
            for scalar in r.elements() {
                next.push(base.add(&gen.scale(scalar)).unwrap().coeffs().to_vec());
            }
        }
        next.sort();
        next.dedup();
        span = next;
    }
    span
}

#[test]
fn fixed_points_equal_span_of_undoubled_generators() {
    let groups = ["C1", "C2", "C3", "C4", "C2xC2"];
    let rings = ["z3", "z4"];
    let mut instances = 0;
    for name in groups {
        let g = catalog::catalog_group(name).unwrap();
        for token in rings {
            let r = Arc::new(parse_ring_token(token).unwrap());
            for tau in enumerate_involutions(&g) {
                for sigma in enumerate_orientations(&g, &r) {
                    if !is_compatible(&tau, &sigma) {
                        continue;
                    }
                    instances += 1;
                    let gens = symmetric_generators(&tau, &sigma);
                    // undoubled first family: bare x for x in N_*
                    let mut basis: Vec<GroupRingElement> = gens
                        .n_star
                        .iter()
                        .map(|x| {
                            GroupRingElement::single(Arc::clone(&g), Arc::clone(&r), x, r.one())
                        })
                        .collect();
                    basis.extend(gens.s2.iter().cloned());
                    basis.extend(gens.s3.iter().cloned());
                    let span = span_of(&basis, &g, &r);

                    let mut fixed: Vec<Vec<usize>> = all_vectors(&g, &r)
                        .into_iter()
                        .filter(|coeffs| {
                            let e = GroupRingElement::from_coeffs(
                                Arc::clone(&g),
                                Arc::clone(&r),
                                coeffs.clone(),
                            )
                            .unwrap();
                            e.sigma_star(&tau, &sigma).unwrap() == e
                        })
                        .collect();
                    fixed.sort();
                    assert_eq!(
                        span,
                        fixed,
                        "{} over {}: span of S1 u S2 u S3 vs fixed points",
                        g.label(),
                        token
                    );
                }
            }
        }
    }
    assert!(instances > 0);
}

#[test]
fn doubled_span_is_contained_in_fixed_points() {
    let g = catalog::catalog_group("C4").unwrap();
    let r = Arc::new(parse_ring_token("z4").unwrap());
    for tau in enumerate_involutions(&g) {
        for sigma in enumerate_orientations(&g, &r) {
            if !is_compatible(&tau, &sigma) {
                continue;
            }
            let gens = symmetric_generators(&tau, &sigma);
            let items: Vec<GroupRingElement> = gens.iter_all().cloned().collect();
            for coeffs in span_of(&items, &g, &r) {
                let e = GroupRingElement::from_coeffs(Arc::clone(&g), Arc::clone(&r), coeffs)
                    .unwrap();
                assert!(e.is_symmetric(&tau, &sigma));
            }
        }
    }
}
