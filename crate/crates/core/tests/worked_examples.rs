//! Small hand-checkable examples, one group per operation.

mod common;

use num_rational::BigRational;

use nestkit::blowup::{blowup, blowup_face_poset};
use nestkit::building::{
    crosscut_complex, enumerate_building_sets, factors, is_building, is_nested, max_building, min_building,
    nested_complex,
};
use nestkit::catalog::{bond_lattice, boolean, chain, complete_graph, partition, remove_top};
use nestkit::complex::{order_complex, SimplicialComplex};
use nestkit::fan::{
    building_chain, char_vector, factor_sum_check, fan_from_nested, sample_support_equality, stellar_subdivide,
    subdivision_sequence, Fan,
};
use nestkit::homology::reduced_homology;
use nestkit::topology::{homology_agreement, is_join_contractible, quillen_fiber_report, FiberCase};
use nestkit::{is_isomorphic, product, validate_meet_semilattice, ElementSet, Poset, Semilattice};

fn set(s: &Semilattice, labels: &[&str]) -> ElementSet {
    s.set_from_labels(labels).unwrap()
}

fn idx(s: &Semilattice, label: &str) -> usize {
    s.index_of(label).unwrap()
}

fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facets((0..n).map(|i| format!("v{i}")).collect(), &facets, 1 << 16).unwrap()
}

fn diamond() -> Poset {
    Poset::from_covers(&["0", "a", "b", "ab"], &[("0", "a"), ("0", "b"), ("a", "ab"), ("b", "ab")]).unwrap()
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

#[test]
fn posets_from_covers() {
    let d = diamond();
    assert_eq!(d.len(), 4);
    assert!(d.leq(0, 3) && !d.comparable(1, 2));
    assert_eq!(Poset::from_covers::<&str, &str>(&["x"], &[]).unwrap().len(), 1);
    assert!(Poset::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
}

#[test]
fn semilattice_validation() {
    let s = validate_meet_semilattice(diamond()).unwrap();
    assert_eq!(s.label(s.bottom()), "0");
    let antichain = Poset::from_covers::<&str, &str>(&["a", "b"], &[]).unwrap();
    assert!(validate_meet_semilattice(antichain).is_err());
    let bowtie = Poset::from_covers(
        &["0", "m1", "m2", "M1", "M2"],
        &[("0", "m1"), ("0", "m2"), ("m1", "M1"), ("m1", "M2"), ("m2", "M1"), ("m2", "M2")],
    )
    .unwrap();
    let err = validate_meet_semilattice(bowtie).unwrap_err().to_string();
    assert!(err.contains("M1") && err.contains("M2"), "{err}");
}

#[test]
fn meets_and_joins() {
    let b2 = boolean(2).unwrap();
    assert_eq!(b2.join_set(&set(&b2, &["1", "2"])), Some(idx(&b2, "12")));
    let v = remove_top(&b2).unwrap();
    assert_eq!(v.join_set(&set(&v, &["1", "2"])), None);
    let p3 = partition(3).unwrap();
    assert_eq!(p3.meet(idx(&p3, "12|3"), idx(&p3, "13|2")), p3.bottom());
    assert_eq!(p3.meet_set(&set(&p3, &["12|3", "1|23"])).unwrap(), p3.bottom());
}

#[test]
fn atoms_below() {
    let b2 = boolean(2).unwrap();
    assert_eq!(b2.atoms_below(idx(&b2, "12")), set(&b2, &["1", "2"]));
    assert!(b2.atoms_below(b2.bottom()).is_empty());
    let p4 = partition(4).unwrap();
    assert_eq!(p4.atoms_below(idx(&p4, "12|34")), set(&p4, &["12|3|4", "1|2|34"]));
}

#[test]
fn maximal_elements() {
    let c = chain(3).unwrap();
    assert_eq!(c.max_of(&set(&c, &["1", "2"])), set(&c, &["2"]));
    let b3 = boolean(3).unwrap();
    let anti = set(&b3, &["12", "13", "23"]);
    assert_eq!(b3.max_of(&anti), anti);
    let p3 = partition(3).unwrap();
    assert_eq!(p3.max_of(&set(&p3, &["12|3", "13|2", "1|23", "123"])), set(&p3, &["123"]));
}

#[test]
fn intervals_and_products() {
    let b2 = boolean(2).unwrap();
    let c2 = chain(2).unwrap();
    let atom = b2.interval(b2.bottom(), idx(&b2, "1")).unwrap();
    assert!(is_isomorphic(&atom.poset, c2.poset()).is_some());
    assert_eq!(b2.interval(1, 1).unwrap().poset.len(), 1);
    let p4 = partition(4).unwrap();
    let iv = p4.interval(p4.bottom(), idx(&p4, "12|34")).unwrap();
    assert!(is_isomorphic(&iv.poset, b2.poset()).is_some());

    let sq = product(&[c2.poset(), c2.poset()]).unwrap();
    assert!(is_isomorphic(&sq, b2.poset()).is_some());
    let point = chain(1).unwrap();
    let p3 = partition(3).unwrap();
    assert!(is_isomorphic(&product(&[p3.poset(), point.poset()]).unwrap(), p3.poset()).is_some());
    let cube = product(&[c2.poset(), c2.poset(), c2.poset()]).unwrap();
    assert_eq!(cube.len(), 8);
    assert!(is_isomorphic(&cube, boolean(3).unwrap().poset()).is_some());
}

#[test]
fn isomorphisms() {
    let b2 = boolean(2).unwrap();
    assert!(is_isomorphic(b2.poset(), chain(4).unwrap().poset()).is_none());
    let p3 = partition(3).unwrap();
    // reversed element order with fresh labels
    let n = p3.len();
    let labels = (0..n).map(|i| format!("q{i}")).collect();
    let q = Poset::from_relation(labels, |a, b| p3.leq(n - 1 - a, n - 1 - b)).unwrap();
    assert!(is_isomorphic(p3.poset(), &q).is_some());
}

#[test]
fn factor_sets() {
    let b2 = boolean(2).unwrap();
    let g = is_building(&b2, &set(&b2, &["1", "2"])).unwrap();
    assert_eq!(factors(&b2, &g, idx(&b2, "12")).unwrap(), set(&b2, &["1", "2"]));
    assert_eq!(factors(&b2, &g, idx(&b2, "1")).unwrap(), set(&b2, &["1"]));
    let p4 = partition(4).unwrap();
    let min = min_building(&p4).unwrap();
    assert_eq!(factors(&p4, &min, idx(&p4, "12|34")).unwrap(), set(&p4, &["12|3|4", "1|2|34"]));
}

#[test]
fn building_sets() {
    let b2 = boolean(2).unwrap();
    assert!(is_building(&b2, &set(&b2, &["1", "2"])).is_some());
    assert!(is_building(&b2, &set(&b2, &["12"])).is_none());
    let p3 = partition(3).unwrap();
    assert!(is_building(&p3, &set(&p3, &["12|3", "13|2", "1|23"])).is_none());

    assert_eq!(min_building(&b2).unwrap().carrier(), &set(&b2, &["1", "2"]));
    assert_eq!(min_building(&p3).unwrap().len(), 4);
    let p4 = partition(4).unwrap();
    let min = min_building(&p4).unwrap();
    assert_eq!(min.len(), 11);
    for two_two in ["12|34", "13|24", "14|23"] {
        assert!(!min.contains(idx(&p4, two_two)));
    }
    assert_eq!(min.members(), common::Order::of(&p4).min_building());

    assert_eq!(max_building(&b2).unwrap().len(), 3);
    assert_eq!(max_building(&chain(2).unwrap()).unwrap().len(), 1);
    assert_eq!(max_building(&p3).unwrap().len(), 4);
}

#[test]
fn enumeration() {
    let b2 = boolean(2).unwrap();
    let all = enumerate_building_sets(&b2, 16).unwrap();
    let carriers: Vec<Vec<String>> = all.iter().map(|g| sorted(b2.labels_of(g.carrier()))).collect();
    assert_eq!(carriers.len(), 2);
    assert!(carriers.contains(&vec!["1".to_string(), "2".to_string()]));
    assert!(carriers.contains(&vec!["1".to_string(), "12".to_string(), "2".to_string()]));
    assert_eq!(enumerate_building_sets(&chain(2).unwrap(), 16).unwrap().len(), 1);

    let p3 = partition(3).unwrap();
    let found = enumerate_building_sets(&p3, 16).unwrap();
    let o = common::Order::of(&p3);
    let expected = o.candidates().into_iter().filter(|c| o.is_building(c)).count();
    assert_eq!(found.len(), expected);
    let min = min_building(&p3).unwrap();
    assert!(found.contains(&min) && found.contains(&max_building(&p3).unwrap()));
}

#[test]
fn nested_sets() {
    let p3 = partition(3).unwrap();
    let min = min_building(&p3).unwrap();
    assert!(is_nested(&p3, &min, &set(&p3, &["12|3", "123"])).unwrap());
    assert!(!is_nested(&p3, &min, &set(&p3, &["12|3", "13|2"])).unwrap());
    let b2 = boolean(2).unwrap();
    let g = min_building(&b2).unwrap();
    assert!(is_nested(&b2, &g, &set(&b2, &["1", "2"])).unwrap());

    let n = nested_complex(&b2, &g).unwrap();
    assert_eq!(n.facets().len(), 1);
    assert_eq!(n.dimension(), 1);
    let n3 = nested_complex(&p3, &min).unwrap();
    let facets: Vec<Vec<String>> = n3
        .facets()
        .iter()
        .map(|f| sorted(f.iter().map(|&v| n3.vertices()[v].clone()).collect()))
        .collect();
    assert_eq!(facets.len(), 3);
    for atom in ["12|3", "13|2", "1|23"] {
        assert!(facets.contains(&sorted(vec![atom.to_string(), "123".to_string()])));
    }
    let apex = n3.vertex_index("123").unwrap();
    assert!(n3.is_cone(apex).unwrap());
}

#[test]
fn crosscut_complexes() {
    let b3 = boolean(3).unwrap();
    let atoms = ElementSet::from_indices(b3.len(), b3.atoms().iter().copied());
    let c = crosscut_complex(&b3, &atoms).unwrap();
    assert_eq!(c.facets(), vec![vec![0, 1, 2]]);
    let v = remove_top(&boolean(2).unwrap()).unwrap();
    let atoms = ElementSet::from_indices(v.len(), v.atoms().iter().copied());
    let c = crosscut_complex(&v, &atoms).unwrap();
    assert_eq!(c.facets().len(), 2);
    assert_eq!(c.dimension(), 0);

    // two triangles sharing an edge
    let fp = complex(4, &[&[0, 1, 2], &[1, 2, 3]]).face_poset();
    let atoms = ElementSet::from_indices(fp.len(), fp.atoms().iter().copied());
    let g = is_building(&fp, &atoms).unwrap();
    assert!(crosscut_complex(&fp, &atoms).unwrap().same_faces(&nested_complex(&fp, &g).unwrap()));
}

#[test]
fn blowups() {
    let b2 = boolean(2).unwrap();
    let b = blowup(&b2, idx(&b2, "12")).unwrap();
    assert_eq!(b.lattice.labels(), ["0", "1", "2", "0^", "1^", "2^"]);
    let l = &b.lattice;
    let covers: Vec<(&str, &str)> = l.poset().covers().iter().map(|&(x, y)| (l.label(x), l.label(y))).collect();
    let mut covers: Vec<(&str, &str)> = covers;
    covers.sort();
    let mut expected = vec![("0", "1"), ("0", "2"), ("0", "0^"), ("0^", "1^"), ("0^", "2^"), ("1", "1^"), ("2", "2^")];
    expected.sort();
    assert_eq!(covers, expected);

    let c2 = chain(2).unwrap();
    let b = blowup(&c2, 1).unwrap();
    assert_eq!(b.lattice.labels(), ["0", "0^"]);

    let b = blowup(&b2, idx(&b2, "1")).unwrap();
    assert_eq!(b.lattice.labels(), ["0", "2", "0^", "2^"]);
    assert!(is_isomorphic(b.lattice.poset(), b2.poset()).is_some());
    assert!(blowup(&b2, b2.bottom()).is_err());
}

#[test]
fn face_poset_blowups() {
    let quadrant = Fan::new(2, vec![vec![1, 0], vec![0, 1]], &[vec![0, 1]], None).unwrap();
    let fp = quadrant.face_poset();
    let b = blowup_face_poset(&fp, idx(&fp, "{r0,r1}")).unwrap();
    let st = stellar_subdivide(&quadrant, &[0, 1], &[1, 1]).unwrap();
    assert!(is_isomorphic(b.lattice.poset(), st.face_poset().poset()).is_some());
    assert_eq!(st.maximal_cones().len(), 2);

    let ray = Fan::new(1, vec![vec![1]], &[vec![0]], None).unwrap();
    let fp = ray.face_poset();
    let b = blowup_face_poset(&fp, idx(&fp, "{r0}")).unwrap();
    assert_eq!(b.lattice.labels(), ["{}", "{}^"]);
    assert!(is_isomorphic(b.lattice.poset(), fp.poset()).is_some());

    let b2 = boolean(2).unwrap();
    let f = fan_from_nested(&b2, &min_building(&b2).unwrap()).unwrap();
    let fp = f.face_poset();
    let top = fp.top().unwrap();
    let st = stellar_subdivide(&f, &[0, 1], &[1, 1]).unwrap();
    assert!(is_isomorphic(blowup_face_poset(&fp, top).unwrap().lattice.poset(), st.face_poset().poset()).is_some());
}

#[test]
fn characteristic_vectors() {
    let b3 = boolean(3).unwrap();
    assert_eq!(char_vector(&b3, idx(&b3, "2")).unwrap(), vec![0, 1, 0]);
    let p3 = partition(3).unwrap();
    assert_eq!(p3.labels()[1..4], ["12|3", "13|2", "1|23"]);
    assert_eq!(char_vector(&p3, idx(&p3, "123")).unwrap(), vec![1, 1, 1]);
}

#[test]
fn fans_from_nested_sets() {
    let b2 = boolean(2).unwrap();
    let min = fan_from_nested(&b2, &min_building(&b2).unwrap()).unwrap();
    assert_eq!(min.rays(), [vec![1, 0], vec![0, 1]]);
    assert_eq!(min.maximal_cones(), vec![vec![0, 1]]);
    let max = fan_from_nested(&b2, &max_building(&b2).unwrap()).unwrap();
    assert_eq!(max.rays().len(), 3);
    assert!(max.rays().contains(&vec![1, 1]));
    assert_eq!(max.maximal_cones().len(), 2);

    let p3 = partition(3).unwrap();
    let f = fan_from_nested(&p3, &min_building(&p3).unwrap()).unwrap();
    assert_eq!(f.rays().len(), 4);
    let top = f.ray_index(&[1, 1, 1]).unwrap();
    let maximal = f.maximal_cones();
    assert_eq!(maximal.len(), 3);
    assert!(maximal.iter().all(|c| c.len() == 2 && c.contains(&top)));
}

#[test]
fn stellar_subdivisions() {
    let quadrant = Fan::new(2, vec![vec![1, 0], vec![0, 1]], &[vec![0, 1]], None).unwrap();
    let st = stellar_subdivide(&quadrant, &[0, 1], &[1, 1]).unwrap();
    let b2 = boolean(2).unwrap();
    let max = fan_from_nested(&b2, &max_building(&b2).unwrap()).unwrap();
    assert!(nestkit::fan::fans_equal(&st, &max));

    // a positive multiple of a ray changes nothing
    let same = stellar_subdivide(&quadrant, &[0], &[3, 0]).unwrap();
    assert!(nestkit::fan::fans_equal(&same, &quadrant));

    let b3 = boolean(3).unwrap();
    let f = fan_from_nested(&b3, &min_building(&b3).unwrap()).unwrap();
    let st = stellar_subdivide(&f, &[0, 1], &[1, 1, 0]).unwrap();
    let maximal = st.maximal_cones();
    assert_eq!(maximal.len(), 2);
    for c in &maximal {
        assert_eq!(c.len(), 3);
        for k in 0..3 {
            let mut face = c.clone();
            face.remove(k);
            assert!(st.contains_cone(&face));
        }
    }
}

#[test]
fn face_posets_of_fans() {
    let single = Fan::new(2, vec![vec![1, 0], vec![0, 1]], &[vec![0, 1]], None).unwrap();
    assert!(is_isomorphic(single.face_poset().poset(), boolean(2).unwrap().poset()).is_some());
    let b2 = boolean(2).unwrap();
    let g = max_building(&b2).unwrap();
    let f = fan_from_nested(&b2, &g).unwrap();
    assert!(is_isomorphic(f.face_poset().poset(), nested_complex(&b2, &g).unwrap().face_poset().poset()).is_some());
    let empty = Fan::new(2, vec![], &[], None).unwrap();
    assert_eq!(empty.face_poset().len(), 1);
}

#[test]
fn building_chains() {
    let b2 = boolean(2).unwrap();
    let (max, min) = (max_building(&b2).unwrap(), min_building(&b2).unwrap());
    let c = building_chain(&b2, &max, &min).unwrap();
    assert_eq!(c.len(), 2);
    assert_eq!(max.carrier().difference(c[1].carrier()), set(&b2, &["12"]));
    assert_eq!(building_chain(&b2, &min, &min).unwrap().len(), 1);
    let p4 = partition(4).unwrap();
    let c = building_chain(&p4, &max_building(&p4).unwrap(), &min_building(&p4).unwrap()).unwrap();
    assert_eq!(c.len(), 4);
}

#[test]
fn subdivision_sequences() {
    let b2 = boolean(2).unwrap();
    let (max, min) = (max_building(&b2).unwrap(), min_building(&b2).unwrap());
    let r = subdivision_sequence(&b2, &max, &min).unwrap();
    assert_eq!(r.steps.len(), 1);
    assert_eq!(r.steps[0].element, "12");
    assert_eq!(r.fans[0].rays(), [vec![1, 0], vec![0, 1]]);
    assert!(r.passed());
    let same = subdivision_sequence(&b2, &min, &min).unwrap();
    assert!(same.steps.is_empty() && same.fans.len() == 1);
    let p4 = partition(4).unwrap();
    let r = subdivision_sequence(&p4, &max_building(&p4).unwrap(), &min_building(&p4).unwrap()).unwrap();
    assert_eq!(r.steps.len(), 3);
    assert!(r.passed());
}

#[test]
fn factor_sums() {
    let b2 = boolean(2).unwrap();
    let (max, min) = (max_building(&b2).unwrap(), min_building(&b2).unwrap());
    assert!(factor_sum_check(&b2, &max, idx(&b2, "12"), &min).unwrap());
    let v: Vec<i64> = [char_vector(&b2, 1).unwrap(), char_vector(&b2, 2).unwrap()]
        .iter()
        .fold(vec![0, 0], |acc, r| acc.iter().zip(r).map(|(a, b)| a + b).collect());
    assert_eq!(v, char_vector(&b2, idx(&b2, "12")).unwrap());
    let p3 = partition(3).unwrap();
    let g = min_building(&p3).unwrap();
    assert!(factor_sum_check(&p3, &g, idx(&p3, "123"), &g).unwrap());
    assert!(factor_sum_check(&b2, &max, idx(&b2, "1"), &min).unwrap());
}

#[test]
fn support_sampling() {
    let b2 = boolean(2).unwrap();
    let min = fan_from_nested(&b2, &min_building(&b2).unwrap()).unwrap();
    let max = fan_from_nested(&b2, &max_building(&b2).unwrap()).unwrap();
    assert!(sample_support_equality(&min, &max, 1000, 0).unwrap().all_agree());
    assert!(sample_support_equality(&max, &max, 100, 1).unwrap().all_agree());
    let narrow = Fan::new(2, vec![vec![1, 0], vec![1, 1]], &[vec![0, 1]], None).unwrap();
    let r = sample_support_equality(&min, &narrow, 200, 0).unwrap();
    let w = r.witness.expect("the cones differ near (0, 1)");
    assert_ne!(min.contains_point(&w), narrow.contains_point(&w));
    let q = |x: i64| BigRational::from_integer(x.into());
    assert!(min.contains_point(&[q(0), q(1)]) && !narrow.contains_point(&[q(0), q(1)]));
}

#[test]
fn order_complexes() {
    let anti = Poset::from_covers::<&str, &str>(&["a", "b", "c"], &[]).unwrap();
    let c = order_complex(&anti);
    assert_eq!(c.facets().len(), 3);
    assert_eq!(c.dimension(), 0);
    let b2 = boolean(2).unwrap();
    let c = nestkit::topology::proper_part_complex(&b2).unwrap();
    assert_eq!(c.facets().len(), 2);
    assert_eq!(c.faces_of_dim(1).count(), 2);
    let c3 = order_complex(chain(3).unwrap().poset());
    assert_eq!(c3.facets(), vec![vec![0, 1, 2]]);
}

#[test]
fn homology_and_euler() {
    let full = complex(3, &[&[0, 1, 2]]);
    assert!(reduced_homology(&full).unwrap().is_acyclic());
    let hollow = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
    let h = reduced_homology(&hollow).unwrap();
    assert_eq!(h.rank(1), 1);
    assert_eq!(h.nontrivial().len(), 1);
    assert_eq!(complex(1, &[&[0]]).euler_characteristic(), 1);
    assert_eq!(hollow.euler_characteristic(), 0);

    let d = nestkit::topology::proper_part_complex(&remove_top(&partition(4).unwrap()).unwrap()).unwrap();
    let h = reduced_homology(&d).unwrap();
    assert_eq!(h.rank(1), 6);
    assert_eq!(h.nontrivial().len(), 1);
    assert!(h.is_torsion_free());
    assert_eq!(d.euler_characteristic(), 1 - 6);
}

#[test]
fn cones() {
    assert!(!complex(3, &[&[0, 1], &[1, 2], &[0, 2]]).is_cone(0).unwrap());
    assert!(complex(3, &[&[0, 1, 2]]).is_cone(1).unwrap());
}

#[test]
fn join_contractibility() {
    let b2 = boolean(2).unwrap();
    let top = idx(&b2, "12");
    assert_eq!(is_join_contractible(&b2, &[top, 1, 2]), Some(top));
    let v = remove_top(&b2).unwrap();
    assert_eq!(is_join_contractible(&v, &[1, 2]), None);

    let p3 = partition(3).unwrap();
    let g = min_building(&p3).unwrap();
    let report = quillen_fiber_report(&p3, &g).unwrap();
    let at_top = report.checks.iter().find(|c| c.element == "123").unwrap();
    assert_eq!(at_top.case, FiberCase::InBuilding);
    assert_eq!(at_top.witness, ["123"]);
    assert!(at_top.passed());
}

#[test]
fn fibers() {
    let b2 = boolean(2).unwrap();
    let r = quillen_fiber_report(&b2, &min_building(&b2).unwrap()).unwrap();
    let top = r.checks.iter().find(|c| c.element == "12").unwrap();
    assert_eq!(top.case, FiberCase::ViaFactors);
    assert_eq!(top.witness, ["1", "2"]);
    assert!(top.passed());
    assert!(r.checks.iter().filter(|c| c.element != "12").all(|c| c.case == FiberCase::InBuilding && c.passed()));

    let p4 = partition(4).unwrap();
    let r = quillen_fiber_report(&p4, &min_building(&p4).unwrap()).unwrap();
    let c = r.checks.iter().find(|c| c.element == "12|34").unwrap();
    assert_eq!(c.case, FiberCase::ViaFactors);
    assert_eq!(sorted(c.witness.clone()), ["12|3|4", "1|2|34"]);
    assert!(r.passed());
}

#[test]
fn homology_agreements() {
    let b2 = boolean(2).unwrap();
    let a = homology_agreement(&b2, &min_building(&b2).unwrap()).unwrap();
    assert!(a.agrees() && a.nested.is_acyclic());
    let p4 = partition(4).unwrap();
    assert!(homology_agreement(&p4, &max_building(&p4).unwrap()).unwrap().agrees());
    let t = remove_top(&p4).unwrap();
    let a = homology_agreement(&t, &min_building(&t).unwrap()).unwrap();
    assert!(a.agrees());
    assert_eq!(a.nested.rank(1), 6);
}

#[test]
fn catalog() {
    assert!(is_isomorphic(boolean(1).unwrap().poset(), chain(2).unwrap().poset()).is_some());
    assert!(is_isomorphic(boolean(2).unwrap().poset(), &diamond()).is_some());
    let b3 = boolean(3).unwrap();
    assert_eq!((b3.len(), b3.atoms().len()), (8, 3));
    assert!(boolean(0).is_err() && boolean(7).is_err());
    assert_eq!(partition(3).unwrap().len(), common::bell(3));
    assert_eq!(partition(4).unwrap().len(), common::bell(4));
    assert!(is_isomorphic(partition(2).unwrap().poset(), chain(2).unwrap().poset()).is_some());
    assert_eq!(partition(4).unwrap().atoms().len(), 6);
    assert_eq!(chain(1).unwrap().len(), 1);

    let k3 = bond_lattice(3, &complete_graph(3)).unwrap();
    assert!(is_isomorphic(k3.poset(), partition(3).unwrap().poset()).is_some());
    let p3 = bond_lattice(3, &[(1, 2), (2, 3)]).unwrap();
    // connected partitions of a path: 1|2|3, 12|3, 1|23, 123
    let path_blocks = common::partitions(3)
        .into_iter()
        .filter(|p| (0..3).all(|i| (0..3).all(|j| p[i] != p[j] || (i.min(j)..i.max(j)).all(|k| p[k] == p[i]))))
        .count();
    assert_eq!(p3.len(), path_blocks);
    assert_eq!(bond_lattice(3, &[]).unwrap().len(), 1);
    assert!(bond_lattice(3, &[(1, 2), (2, 1)]).is_err());
    assert!(bond_lattice(3, &[(1, 1)]).is_err());
    let k4 = bond_lattice(4, &complete_graph(4)).unwrap();
    assert!(is_isomorphic(k4.poset(), partition(4).unwrap().poset()).is_some());

    let v = remove_top(&boolean(2).unwrap()).unwrap();
    assert_eq!(v.len(), 3);
    assert_eq!(remove_top(&partition(3).unwrap()).unwrap().len(), 4);
    assert!(is_isomorphic(remove_top(&chain(3).unwrap()).unwrap().poset(), chain(2).unwrap().poset()).is_some());
    assert!(remove_top(&v).is_err());
    assert!(remove_top(&partition(4).unwrap()).unwrap().is_atomic());
}
