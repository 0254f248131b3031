use num_bigint::{BigInt, BigUint};
use permpow_core::families::{c8_catalog, complete_bipartite, cycle_graph};
use permpow_core::partition::{neighborhood_partition, permutation_quotient_counts, quotient_adjacency};
use permpow_core::power::{products_equal, PowerSpace};
use permpow_core::reduction::{
    brute_force_equivalent_involutions, count_involution_candidates, invertible_quotient_fast_path,
    reduce_to_involution, FastPath,
};
use permpow_core::zigzag::{cloud_graph_from_permutation, zigzag_product};
use permpow_core::{Graph, IntegerMatrix, LabeledGraph, Partition, Permutation};

/// Six vertices, edges 0-2, 1-2, 2-3, 3-4, 3-5.
fn h6() -> Graph {
    Graph::from_edges(6, &[(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap()
}

fn labeled_c4() -> LabeledGraph {
    let quads: Vec<_> = (0..4)
        .flat_map(|i| [(i, 0, (i + 1) % 4, 1), (i, 1, (i + 3) % 4, 0)])
        .collect();
    LabeledGraph::new(4, 2, &quads).unwrap()
}

/// Triangle on a, b, c with colors A, B.
fn triangle_h() -> LabeledGraph {
    LabeledGraph::new(3, 2, &[(0, 0, 1, 1), (1, 1, 0, 0), (0, 1, 2, 0), (2, 0, 0, 1), (2, 1, 1, 0), (1, 0, 2, 1)]).unwrap()
}

/// Four vertices, three colors, given by their rotation permutation matrix.
fn four_vertex_g() -> LabeledGraph {
    let images = [5, 8, 9, 10, 6, 0, 4, 11, 1, 2, 3, 7];
    let rot = images.iter().map(|&y| (y / 3, y % 3)).collect();
    LabeledGraph::from_map(4, 3, rot).unwrap()
}

fn rows(m: &IntegerMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect()
}

fn support(g: &Graph, v: usize) -> Vec<usize> {
    g.neighbors(v).into_iter().map(|(w, _)| w).collect()
}

#[test]
fn rotation_matrix_is_reproduced_bit_exact() {
    let rows: [[u8; 12]; 12] = [
        [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    ];
    let expected = IntegerMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
    let p = four_vertex_g().rotation_permutation();
    assert_eq!(p.matrix(), expected);
    assert!(p.is_involution());
    assert!(expected.is_symmetric());
}

#[test]
fn zigzag_neighbors_of_first_vertex() {
    let z = zigzag_product(&four_vertex_g(), &triangle_h()).unwrap();
    // (1,a) is index 0; (3,a), (3,b), (4,b), (4,c) are 6, 7, 10, 11.
    assert_eq!(support(&z, 0), vec![6, 7, 10, 11]);
    assert_eq!(z.regular_degree(), Some(BigInt::from(4)));
}

#[test]
fn zigzag_matches_sandwich_product() {
    let g = four_vertex_g();
    let h = triangle_h();
    let z = zigzag_product(&g, &h).unwrap();
    let space = PowerSpace::new(&h.underlying(), 4).unwrap();
    assert_eq!(&space.product(&g.rotation_permutation()).unwrap(), z.adjacency());
}

#[test]
fn three_copies_of_c4_with_an_involution() {
    let c4 = cycle_graph(4).unwrap();
    let p = Permutation::parse_cycles("(0 11)(1 9)(2 5)(3 6)(4 10)(7 8)", 12).unwrap();
    let p2 = Permutation::parse_cycles("(0 11 3 6 10 7 8 4 1 9 2 5)", 12).unwrap();
    let space = PowerSpace::new(&c4, 3).unwrap();
    let power = space.power(&p).unwrap();
    assert!(power.symmetric);
    assert!(space.is_symmetric(&p2).unwrap());
    assert!(space.products_equal(&p, &p2).unwrap());
    assert_eq!(power.graph.unwrap().regular_degree(), Some(BigInt::from(4)));

    let cloud = cloud_graph_from_permutation(&p, 3, 4).unwrap();
    assert_eq!(cloud.undirected_edges().unwrap().len(), 6);
    let g = cloud.to_labeled_graph().unwrap();
    assert_eq!(zigzag_product(&g, &labeled_c4()).unwrap().adjacency(), &power.product);
    assert!(cloud_graph_from_permutation(&p2, 3, 4).unwrap().to_labeled_graph().is_none());
}

#[test]
fn two_copies_of_h6_with_an_eight_cycle() {
    let h = h6();
    let p = Permutation::parse_cycles("(0 4 6 3 7 5 1 8)(2 9)(10 11)", 12).unwrap();
    let space = PowerSpace::new(&h, 2).unwrap();
    let power = space.power(&p).unwrap();
    assert!(power.symmetric);
    let graph = power.graph.unwrap();
    assert_eq!(support(&graph, 2), vec![3, 6, 7, 8, 9]);
    for (r, s) in [(0, 1), (4, 5), (6, 7), (10, 11)] {
        assert!(graph.same_neighborhood(r, s), "{r} and {s}");
    }

    let cloud = cloud_graph_from_permutation(&p, 2, 6).unwrap();
    let forward: Vec<_> = cloud
        .arcs_between(0, 1)
        .iter()
        .map(|a| (a.source_color, a.target_color))
        .collect();
    // (2, 3) is the transposition (2 9); the other three are one-way arcs.
    assert_eq!(forward, vec![(1, 2), (2, 3), (3, 1), (4, 0)]);
    let backward: Vec<_> = cloud
        .arcs_between(1, 0)
        .iter()
        .map(|a| (a.source_color, a.target_color))
        .collect();
    assert_eq!(backward, vec![(0, 3), (1, 5), (2, 0), (3, 2)]);
    assert!(!cloud.is_undirected());
    let loop5 = cloud.arcs()[5];
    assert_eq!((loop5.target_cloud, loop5.target_color), (0, 1));

    let reference_q = Permutation::parse_cycles("(0 4)(1 8)(2 9)(3 7)(5 6)(10 11)", 12).unwrap();
    assert!(space.products_equal(&p, &reference_q).unwrap());
    let q = reduce_to_involution(&h, 2, &p).unwrap();
    assert!(q.is_involution());
    assert!(space.products_equal(&p, &q).unwrap());
}

#[test]
fn eight_cycle_quotient_counts() {
    let h = h6();
    let p = Permutation::parse_cycles("(0 4 6 3 7 5 1 8)(2 9)(10 11)", 12).unwrap();
    let pi = neighborhood_partition(&h.disjoint_copies(2).unwrap());
    assert_eq!(
        pi.blocks(),
        &[vec![0, 1], vec![2], vec![3], vec![4, 5], vec![6, 7], vec![8], vec![9], vec![10, 11]]
    );
    // The normalized quotient times √(|C_i||C_j|).
    let counts = permutation_quotient_counts(&p, &pi).unwrap();
    assert_eq!(
        rows(&counts),
        vec![
            vec![0, 0, 0, 1, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 1, 0, 0, 0],
            vec![1, 0, 0, 0, 1, 0, 0, 0],
            vec![0, 0, 1, 1, 0, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 0, 0, 0, 0, 0, 2],
        ]
    );
    // Product of p_ij! over all ordered pairs: only the 2 on the diagonal counts.
    assert_eq!(count_involution_candidates(&p, &pi).unwrap(), BigUint::from(2u32));
}

#[test]
fn neighborhood_quotient_of_h6() {
    let h = h6();
    let pi = neighborhood_partition(&h);
    assert_eq!(pi.blocks(), &[vec![0, 1], vec![2], vec![3], vec![4, 5]]);
    let q = quotient_adjacency(&h, &pi).unwrap();
    assert_eq!(rows(&q.counts), vec![vec![0, 2, 0, 0], vec![2, 0, 1, 0], vec![0, 1, 0, 2], vec![0, 0, 2, 0]]);
    assert_eq!(q.sizes, vec![2, 1, 1, 2]);
    let sqrt2 = std::f64::consts::SQRT_2;
    assert!((q.entry_f64(0, 1) - sqrt2).abs() < 1e-12);
    assert!((q.entry_f64(1, 2) - 1.0).abs() < 1e-12);
    assert!((q.entry_f64(2, 3) - sqrt2).abs() < 1e-12);
}

#[test]
fn two_copies_of_k35() {
    let k35 = complete_bipartite(3, 5).unwrap();
    let one_based = [4, 10, 16, 8, 2, 9, 15, 14, 6, 13, 3, 7, 11, 5, 12, 1];
    let p = Permutation::from_images(one_based.iter().map(|x| x - 1).collect()).unwrap();
    assert!(!p.is_involution());
    let space = PowerSpace::new(&k35, 2).unwrap();
    assert!(space.is_symmetric(&p).unwrap());

    let pi = neighborhood_partition(space.copies());
    assert_eq!(pi.sizes(), vec![3, 5, 3, 5]);
    let counts = permutation_quotient_counts(&p, &pi).unwrap();
    assert_eq!(rows(&counts), vec![vec![0, 1, 1, 1], vec![1, 1, 1, 2], vec![1, 1, 0, 1], vec![1, 2, 1, 1]]);
    assert!(counts.is_symmetric());
    assert_eq!(counts[(0, 1)], BigInt::from(1));
    // 1!⁸ · 2!² · (0!)² · (1!)⁴
    assert_eq!(count_involution_candidates(&p, &pi).unwrap(), BigUint::from(4u32));

    let reference_q: Vec<Vec<usize>> = [[1, 5], [2, 11], [3, 16], [6, 9], [7, 12], [8, 14], [10, 13]]
        .iter()
        .map(|c| c.iter().map(|x| x - 1).collect())
        .collect();
    let reference_q = Permutation::from_cycles(16, &reference_q).unwrap();
    assert!(reference_q.is_involution());
    assert!(space.products_equal(&p, &reference_q).unwrap());

    let q = reduce_to_involution(&k35, 2, &p).unwrap();
    assert!(q.is_involution());
    assert!(space.products_equal(&p, &q).unwrap());
    assert_eq!(invertible_quotient_fast_path(&k35, 2, &p).unwrap(), FastPath::Reduced(q));
}

#[test]
fn c8_four_cycle_has_no_equivalent_involution() {
    let c8 = cycle_graph(8).unwrap();
    let tau4 = c8_catalog().taus[3].clone();
    assert_eq!(tau4, Permutation::parse_cycles("(1 5 7 3)", 8).unwrap());
    let power = PowerSpace::new(&c8, 1).unwrap().power(&tau4).unwrap();
    assert_eq!(power.graph.unwrap().components().len(), 2);
    assert!(brute_force_equivalent_involutions(&c8, 1, &tau4, 1000).unwrap().is_empty());
    assert_eq!(invertible_quotient_fast_path(&c8, 1, &tau4).unwrap(), FastPath::SingularQuotient);
}

#[test]
fn c8_double_four_cycle_has_an_equivalent_involution() {
    let c8 = cycle_graph(8).unwrap();
    let gamma1 = c8_catalog().gammas[0].clone();
    assert_eq!(gamma1, Permutation::parse_cycles("(0 1 2 3)(4 7 6 5)", 8).unwrap());
    let found = brute_force_equivalent_involutions(&c8, 1, &gamma1, 1000).unwrap();
    let q = Permutation::parse_cycles("(0 1)(2 3)(4 7)(5 6)", 8).unwrap();
    assert!(found.contains(&q));
    assert!(products_equal(&c8, 1, &gamma1, &q).unwrap());
}

#[test]
fn twins_in_the_power_without_twins_in_the_base() {
    // C_8 has a trivial neighborhood partition, yet this power has twins.
    let c8 = cycle_graph(8).unwrap();
    assert!(neighborhood_partition(&c8).is_trivial());
    let p = Permutation::parse_cycles("(0 3 2 1)(4 5 6 7)", 8).unwrap();
    let power = PowerSpace::new(&c8, 1).unwrap().power(&p).unwrap();
    let graph = power.graph.expect("symmetric product");
    assert!(graph.same_neighborhood(0, 4));
    assert!(graph.same_neighborhood(3, 7));
}

#[test]
fn equal_products_with_different_quotients() {
    // On C_8 every quotient is the permutation itself, so a non-involution
    // and an involution with equal products have different quotients.
    let c8 = cycle_graph(8).unwrap();
    let gamma1 = c8_catalog().gammas[0].clone();
    let q = Permutation::parse_cycles("(0 1)(2 3)(4 7)(5 6)", 8).unwrap();
    let pi = Partition::singletons(8);
    assert!(products_equal(&c8, 1, &gamma1, &q).unwrap());
    assert_ne!(
        permutation_quotient_counts(&gamma1, &pi).unwrap(),
        permutation_quotient_counts(&q, &pi).unwrap()
    );
}

#[test]
fn c4_is_k22_after_relabeling() {
    // Cycle order 0-1-2-3 puts {0,2} and {1,3} on opposite sides.
    let c4 = cycle_graph(4).unwrap();
    let k22 = complete_bipartite(2, 2).unwrap();
    let relabel = [0, 2, 1, 3];
    for u in 0..4 {
        for v in 0..4 {
            assert_eq!(c4.multiplicity(u, v), k22.multiplicity(relabel[u], relabel[v]));
        }
    }
}
