use dualskew_core::nclattice::{build_group, characteristic_poly, nc_interval_for, NcLattice};
use dualskew_core::skewgrowth::{skew_growth, CoxeterType};
use petgraph::algo::is_isomorphic;
use petgraph::graph::DiGraph;

fn hasse(l: &NcLattice) -> DiGraph<(), ()> {
    let edges: Vec<(u32, u32)> = l.hasse_edges().into_iter().map(|(a, b)| (a as u32, b as u32)).collect();
    let mut g = DiGraph::<(), ()>::from_edges(&edges);
    while g.node_count() < l.len() {
        g.add_node(());
    }
    g
}

fn orderings(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..n).collect::<Vec<_>>(), (0..n).rev().collect()];
    let mut rotated: Vec<usize> = (1..n).collect();
    rotated.push(0);
    out.push(rotated);
    out
}

#[test]
fn coxeter_element_choice_does_not_matter() {
    for c in ["A2", "B2", "A3", "B3", "D4"] {
        let ctype: CoxeterType = c.parse().unwrap();
        let g = build_group(ctype).unwrap();
        let lattices: Vec<NcLattice> = orderings(g.rank())
            .iter()
            .map(|o| nc_interval_for(&g, g.coxeter_element_from_order(o)).unwrap())
            .collect();
        let reference = hasse(&lattices[0]);
        for l in &lattices {
            assert_eq!(characteristic_poly(l), skew_growth(ctype).poly, "{c}");
            assert!(is_isomorphic(&reference, &hasse(l)), "{c}");
        }
    }
}

#[test]
fn exceptional_lattices_match_tables() {
    for c in [CoxeterType::f4(), CoxeterType::g2()] {
        let g = build_group(c).unwrap();
        let l = dualskew_core::nclattice::nc_interval(&g).unwrap();
        assert_eq!(characteristic_poly(&l), skew_growth(c).poly, "{c}");
    }
}

#[test]
fn cache_survives_a_file_round_trip() {
    let c: CoxeterType = "D4".parse().unwrap();
    let l = dualskew_core::nclattice::nc_interval(&build_group(c).unwrap()).unwrap();
    let dir = std::env::temp_dir().join(format!("dualskew-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d4.json");
    std::fs::write(&path, l.to_json().unwrap()).unwrap();
    let back = NcLattice::from_json(&std::fs::read_to_string(&path).unwrap(), c).unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(back.mobius(), l.mobius());
    for x in 0..l.len() {
        for y in 0..l.len() {
            assert_eq!(back.join(x, y), l.join(x, y));
        }
    }
}
