//! Automorphism groups by individualization-refinement, subgroup orders of
//! explicit automorphisms, and linear isomorphisms between Cayley
//! presentations over V(n,3).
//!
//! Colour refinement alone cannot split a strongly regular graph, so the
//! search refines against a family of invariant relations rather than the
//! adjacency relation only: the vertex pairs are classed by (adjacent?,
//! number of common neighbours), and every class except the largest becomes
//! one relation. For a strictly Deza graph this separates the `a` and `b`
//! pairs; for any graph it is invariant under all automorphisms.
//!
//! The search builds one leftmost path of the search tree. Its individualized
//! vertices form a base for the automorphism group. Working from the deepest
//! level up, each vertex `w` of a target cell that is not already in the
//! known orbit of the path vertex is tried: a depth-first search below
//! `(prefix, w)` looks for a leaf whose induced map is an automorphism.
//! Nodes whose refinement invariant differs from the path node at the same
//! depth are pruned. Discovered automorphisms feed a stabilizer chain on the
//! same base, which yields the orbits used for pruning and the exact order.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::gf3::{ConnectionSet, Gf3Matrix, GfVector};
use crate::graph::{automorphism_violation, Graph, GraphError};
use crate::perm::{group_order, GroupOrder, PermError, Permutation, StabilizerChain};

pub const DEFAULT_MAX_VERTICES: usize = 1024;
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000;
const MAX_RELATIONS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("graph has {vertices} vertices, above the configured ceiling {ceiling}")]
    TooLarge { vertices: usize, ceiling: usize },
    #[error("search budget of {budget} nodes exhausted; group order is at least {lower_bound}")]
    BudgetExhausted {
        budget: u64,
        lower_bound: GroupOrder,
        generators: Vec<Permutation>,
    },
    #[error("generator {index} is not an automorphism: edge {{{u},{w}}} maps to a non-edge")]
    NotAutomorphism { index: usize, u: usize, w: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Vertex relations derived from common-neighbour counts, as bit graphs.
pub fn pair_relations(g: &Graph) -> Vec<Graph> {
    let n = g.vertex_count();
    let classes: Vec<Vec<(usize, bool, usize)>> = (0..n)
        .into_par_iter()
        .map(|u| {
            (u + 1..n)
                .map(|w| (w, g.has_edge(u, w), g.common_neighbor_count(u, w)))
                .collect()
        })
        .collect();
    let mut sizes: BTreeMap<(bool, usize), usize> = BTreeMap::new();
    for row in &classes {
        for &(_, adj, c) in row {
            *sizes.entry((adj, c)).or_default() += 1;
        }
    }
    if sizes.len() > MAX_RELATIONS {
        return vec![g.clone()];
    }
    let largest = sizes
        .iter()
        .max_by_key(|(k, &s)| (s, std::cmp::Reverse(**k)))
        .map(|(k, _)| *k);
    let keys: Vec<(bool, usize)> = sizes
        .keys()
        .copied()
        .filter(|k| Some(*k) != largest)
        .collect();
    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new(); keys.len()];
    for (u, row) in classes.iter().enumerate() {
        for &(w, adj, c) in row {
            if let Some(i) = keys.iter().position(|&k| k == (adj, c)) {
                edges[i].push((u, w));
            }
        }
    }
    let relations: Vec<Graph> = edges
        .into_iter()
        .map(|e| Graph::from_edges(n, e).expect("valid pairs"))
        .collect();
    if relations.is_empty() {
        // Complete or empty graph: a single class carries no information.
        vec![g.clone()]
    } else {
        relations
    }
}

/// Per-vertex colouring by the counts of partners in each pair class.
pub fn pair_invariant_colouring(g: &Graph) -> Vec<u32> {
    refine_relations(&pair_relations(g), &vec![0; g.vertex_count()], 1)
}

/// Coarsest equitable refinement of `colouring` for the adjacency relation.
pub fn refine(g: &Graph, colouring: &[u32]) -> Vec<u32> {
    refine_relations(std::slice::from_ref(g), colouring, usize::MAX)
}

/// Refines against several relations for at most `max_rounds` rounds.
///
/// Colours are renumbered `0..c` so that the new order refines the old one
/// and, within an old cell, sub-cells are ordered by their neighbour-count
/// signatures. The numbering depends only on the structure, never on vertex
/// labels, which is what makes refined colourings comparable across
/// search-tree nodes.
pub fn refine_relations(relations: &[Graph], colouring: &[u32], max_rounds: usize) -> Vec<u32> {
    let n = colouring.len();
    let mut colours = normalize(colouring);
    let mut count = colours.iter().max().map_or(0, |&c| c as usize + 1);
    let mut rounds = 0;
    while rounds < max_rounds && count < n {
        let stride = 1 + relations.len() * count;
        let mut sig = vec![0u32; n * stride];
        for u in 0..n {
            let s = &mut sig[u * stride..(u + 1) * stride];
            s[0] = colours[u];
            for (r, rel) in relations.iter().enumerate() {
                let base = 1 + r * count;
                for w in rel.neighbors(u) {
                    s[base + colours[w] as usize] += 1;
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            sig[a * stride..(a + 1) * stride].cmp(&sig[b * stride..(b + 1) * stride])
        });
        let mut next = vec![0u32; n];
        let mut c = 0u32;
        for i in 0..n {
            if i > 0
                && sig[order[i] * stride..(order[i] + 1) * stride]
                    != sig[order[i - 1] * stride..(order[i - 1] + 1) * stride]
            {
                c += 1;
            }
            next[order[i]] = c;
        }
        let new_count = c as usize + 1;
        colours = next;
        rounds += 1;
        if new_count == count {
            break;
        }
        count = new_count;
    }
    colours
}

// Renumbers colours to 0..c preserving their order.
fn normalize(colouring: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = colouring.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    colouring
        .iter()
        .map(|c| distinct.binary_search(c).expect("present") as u32)
        .collect()
}

fn colour_count(colouring: &[u32]) -> usize {
    colouring.iter().max().map_or(0, |&c| c as usize + 1)
}

/// `w` becomes a singleton placed immediately before the rest of its cell.
fn individualize(colouring: &[u32], w: usize) -> Vec<u32> {
    let c = colouring[w];
    colouring
        .iter()
        .enumerate()
        .map(|(u, &x)| {
            if x > c || (x == c && u != w) {
                x + 1
            } else {
                x
            }
        })
        .collect()
}

/// Smallest non-singleton cell, lowest colour on ties.
fn target_cell(colouring: &[u32]) -> Option<u32> {
    let mut sizes = vec![0usize; colour_count(colouring)];
    for &c in colouring {
        sizes[c as usize] += 1;
    }
    sizes
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 1)
        .min_by_key(|(c, &s)| (s, *c))
        .map(|(c, _)| c as u32)
}

fn cell_members(colouring: &[u32], colour: u32) -> Vec<usize> {
    (0..colouring.len())
        .filter(|&u| colouring[u] == colour)
        .collect()
}

// Hash of the quotient structure of an equitable colouring: cell sizes and,
// per relation, the neighbour counts from one representative of each cell.
fn node_invariant(relations: &[Graph], colouring: &[u32]) -> u64 {
    let count = colour_count(colouring);
    let mut reps = vec![usize::MAX; count];
    let mut sizes = vec![0usize; count];
    for (u, &c) in colouring.iter().enumerate() {
        sizes[c as usize] += 1;
        if reps[c as usize] == usize::MAX {
            reps[c as usize] = u;
        }
    }
    let mut h = DefaultHasher::new();
    sizes.hash(&mut h);
    for rel in relations {
        for &u in &reps {
            let mut counts = vec![0u32; count];
            for w in rel.neighbors(u) {
                counts[colouring[w] as usize] += 1;
            }
            counts.hash(&mut h);
        }
    }
    h.finish()
}

#[derive(Clone, Debug)]
pub struct AutOptions {
    pub max_vertices: usize,
    pub node_budget: u64,
    /// Known automorphisms used to prune the search. They must be
    /// automorphisms; the resulting group does not depend on them.
    pub seeds: Vec<Permutation>,
}

impl Default for AutOptions {
    fn default() -> Self {
        AutOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
            node_budget: DEFAULT_NODE_BUDGET,
            seeds: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AutResult {
    pub order: GroupOrder,
    pub generator_count: usize,
    /// Sorted by image array.
    pub generators: Vec<Permutation>,
    pub orbit_count: usize,
    pub nodes_searched: u64,
    pub base: Vec<usize>,
}

struct PathNode {
    colouring: Vec<u32>,
    invariant: u64,
    target: Option<u32>,
}

struct Search<'a> {
    graph: &'a Graph,
    relations: Vec<Graph>,
    path: Vec<PathNode>,
    leaf_vertex_of_colour: Vec<usize>,
    nodes: u64,
    budget: u64,
}

enum Outcome {
    Found(Permutation),
    NotFound,
    OutOfBudget,
}

impl Search<'_> {
    fn refine(&self, colouring: &[u32]) -> Vec<u32> {
        refine_relations(&self.relations, colouring, usize::MAX)
    }

    // Depth-first search below the child of path depth `depth` obtained by
    // individualizing `pick` in `colouring`.
    fn search(&mut self, colouring: &[u32], depth: usize, pick: usize) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::OutOfBudget;
        }
        let child = self.refine(&individualize(colouring, pick));
        let reference = &self.path[depth + 1];
        if node_invariant(&self.relations, &child) != reference.invariant {
            return Outcome::NotFound;
        }
        match reference.target {
            None => {
                let n = child.len();
                if colour_count(&child) != n {
                    return Outcome::NotFound;
                }
                let mut images = vec![0; n];
                for (u, &c) in child.iter().enumerate() {
                    images[self.leaf_vertex_of_colour[c as usize]] = u;
                }
                let perm =
                    Permutation::from_images(images).expect("discrete colourings give bijections");
                match automorphism_violation(self.graph, &perm) {
                    Ok(None) => Outcome::Found(perm),
                    _ => Outcome::NotFound,
                }
            }
            Some(target) => {
                for u in cell_members(&child, target) {
                    match self.search(&child, depth + 1, u) {
                        Outcome::NotFound => continue,
                        other => return other,
                    }
                }
                Outcome::NotFound
            }
        }
    }
}

/// Number of orbits of the group generated by `generators` on `0..n`.
pub fn orbit_count(n: usize, generators: &[Permutation]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in generators {
        for i in 0..n {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).filter(|&i| find(&mut parent, i) == i).count()
}

/// Generators and exact order of `Aut(g)`.
pub fn automorphism_group(g: &Graph, options: &AutOptions) -> Result<AutResult, AutError> {
    let n = g.vertex_count();
    if n > options.max_vertices {
        return Err(AutError::TooLarge {
            vertices: n,
            ceiling: options.max_vertices,
        });
    }
    for (index, s) in options.seeds.iter().enumerate() {
        if let Some((u, w)) = automorphism_violation(g, s)? {
            return Err(AutError::NotAutomorphism { index, u, w });
        }
    }
    let relations = pair_relations(g);

    // Leftmost path.
    let mut path = Vec::new();
    let mut base = Vec::new();
    let mut colouring = refine_relations(&relations, &vec![0; n], usize::MAX);
    loop {
        let target = target_cell(&colouring);
        let invariant = node_invariant(&relations, &colouring);
        path.push(PathNode {
            colouring: colouring.clone(),
            invariant,
            target,
        });
        let Some(t) = target else { break };
        let v = cell_members(&colouring, t)[0];
        base.push(v);
        colouring = refine_relations(&relations, &individualize(&colouring, v), usize::MAX);
    }
    let mut leaf_vertex_of_colour = vec![0; n];
    for (u, &c) in path.last().expect("root").colouring.iter().enumerate() {
        leaf_vertex_of_colour[c as usize] = u;
    }

    let mut chain = StabilizerChain::with_base(n, &base);
    for s in &options.seeds {
        chain.add_generator(s)?;
    }
    let mut search = Search {
        graph: g,
        relations,
        path,
        leaf_vertex_of_colour,
        nodes: 0,
        budget: options.node_budget,
    };
    let mut generators: Vec<Permutation> = Vec::new();
    for level in (0..base.len()).rev() {
        let node_colouring = search.path[level].colouring.clone();
        let target = search.path[level].target.expect("interior node");
        for w in cell_members(&node_colouring, target) {
            if chain.in_orbit(level, w) {
                continue;
            }
            match search.search(&node_colouring, level, w) {
                Outcome::Found(perm) => {
                    debug_assert!((0..level).all(|i| perm.apply(base[i]) == base[i]));
                    chain.add_generator(&perm)?;
                    generators.push(perm);
                }
                Outcome::NotFound => {}
                Outcome::OutOfBudget => {
                    let mut all = options.seeds.clone();
                    all.extend(generators);
                    all.sort();
                    return Err(AutError::BudgetExhausted {
                        budget: options.node_budget,
                        lower_bound: chain.order(),
                        generators: all,
                    });
                }
            }
        }
    }
    let mut all: Vec<Permutation> = options.seeds.iter().cloned().chain(generators).collect();
    all.sort();
    all.dedup();
    let order = chain.order();
    debug_assert_eq!(group_order(&all).map(|o| o == order), Ok(true));
    Ok(AutResult {
        order,
        generator_count: all.len(),
        orbit_count: orbit_count(n, &all),
        generators: all,
        nodes_searched: search.nodes,
        base,
    })
}

/// Order of the group generated by automorphisms `gens` of `g`: a certified
/// lower bound for `|Aut(g)|`.
pub fn verify_subgroup(g: &Graph, gens: &[Permutation]) -> Result<GroupOrder, AutError> {
    for (index, s) in gens.iter().enumerate() {
        if let Some((u, w)) = automorphism_violation(g, s)? {
            return Err(AutError::NotAutomorphism { index, u, w });
        }
    }
    Ok(group_order(gens)?)
}

/// Whether `σ` maps `a` isomorphically onto `b`.
pub fn is_isomorphism(a: &Graph, b: &Graph, sigma: &Permutation) -> bool {
    a.vertex_count() == b.vertex_count()
        && sigma.degree() == a.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.edges()
            .all(|(u, w)| b.has_edge(sigma.apply(u), sigma.apply(w)))
}

/// Outcome of the linear isomorphism search.
#[derive(Clone, Debug, Serialize)]
pub struct LinearIsomorphism {
    pub matrix: Option<Gf3Matrix>,
    pub candidates_examined: u64,
}

/// Searches for an invertible `L` with `S_a · L = S_b`.
///
/// `L` is fixed by the images of `n` independent vectors of `S_a`, taken
/// greedily in sorted order; every ordered `n`-tuple of distinct vectors of
/// `S_b` is tried as those images. Absence of `L` does not rule out a
/// non-linear graph isomorphism.
pub fn find_linear_cayley_isomorphism(sa: &ConnectionSet, sb: &ConnectionSet) -> LinearIsomorphism {
    let n = sa.dim();
    let none = |examined| LinearIsomorphism {
        matrix: None,
        candidates_examined: examined,
    };
    if sb.dim() != n || sa.len() != sb.len() {
        return none(0);
    }
    let mut basis: Vec<GfVector> = Vec::new();
    for v in sa.iter() {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if Gf3Matrix::from_vectors(&trial)
            .expect("equal lengths")
            .rank()
            == trial.len()
        {
            basis = trial;
        }
        if basis.len() == n {
            break;
        }
    }
    if basis.len() < n {
        return none(0);
    }
    let binv = Gf3Matrix::from_vectors(&basis)
        .expect("equal lengths")
        .inverse()
        .expect("independent rows");
    let targets: Vec<GfVector> = sb.iter().cloned().collect();
    let indicator = sb.indicator();
    let sources: Vec<&GfVector> = sa.iter().collect();

    let results: Vec<(u64, Option<Gf3Matrix>)> = (0..targets.len())
        .into_par_iter()
        .map(|first| {
            let mut examined = 0u64;
            let mut chosen = vec![first];
            let found = extend_tuple(&targets, &mut chosen, n, &mut |tuple: &[usize]| {
                examined += 1;
                let images: Vec<GfVector> = tuple.iter().map(|&i| targets[i].clone()).collect();
                let l = binv
                    .mul(&Gf3Matrix::from_vectors(&images).expect("equal lengths"))
                    .expect("shapes agree");
                let maps_into = sources
                    .iter()
                    .all(|s| indicator[s.mul_matrix(&l).expect("shapes agree").index()]);
                (maps_into && l.is_invertible()).then_some(l)
            });
            (examined, found)
        })
        .collect();
    // First hit in enumeration order, so the answer is deterministic.
    let mut examined = 0;
    for (count, found) in results {
        examined += count;
        if found.is_some() {
            return LinearIsomorphism {
                matrix: found,
                candidates_examined: examined,
            };
        }
    }
    none(examined)
}

fn extend_tuple(
    targets: &[GfVector],
    chosen: &mut Vec<usize>,
    n: usize,
    check: &mut impl FnMut(&[usize]) -> Option<Gf3Matrix>,
) -> Option<Gf3Matrix> {
    if chosen.len() == n {
        return check(chosen);
    }
    for i in 0..targets.len() {
        if chosen.contains(&i) {
            continue;
        }
        chosen.push(i);
        let found = extend_tuple(targets, chosen, n, check);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3::m11;
    use crate::graph::{cayley, dual_seidel_switch, is_automorphism};
    use crate::perm::{perm_from_matrix, translation_perm};

    fn gamma() -> Graph {
        cayley(5, &m11::s1()).unwrap()
    }

    // All permutations of 0..n, for brute-force automorphism counts.
    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_force_order(g: &Graph) -> usize {
        all_permutations(g.vertex_count())
            .into_iter()
            .filter(|p| is_automorphism(g, &Permutation::from_images(p.clone()).unwrap()).unwrap())
            .count()
    }

    #[test]
    fn refinement_examples() {
        let g = gamma();
        assert_eq!(colour_count(&refine(&g, &vec![0; 243])), 1);
        let p3 = Graph::path(3);
        let c = refine(&p3, &[0, 0, 0]);
        assert_eq!(c[0], c[2]);
        assert_ne!(c[0], c[1]);
        // Equitable: each vertex sees the same counts per cell as its cellmates.
        let c = refine(&Graph::path(7), &[0; 7]);
        assert_eq!(colour_count(&c), 4);
    }

    #[test]
    fn pair_invariant_splits_switched_graph() {
        let g = gamma();
        let d = dual_seidel_switch(&g, &perm_from_matrix(&m11::x()).unwrap()).unwrap();
        assert_eq!(colour_count(&refine(&d, &vec![0; 243])), 1);
        let seeded = refine(&d, &pair_invariant_colouring(&d));
        assert!(colour_count(&seeded) > 1);
    }

    #[test]
    fn small_groups_match_brute_force() {
        for g in [
            Graph::cycle(5),
            Graph::path(4),
            Graph::complete(4),
            Graph::cycle(6),
        ] {
            let r = automorphism_group(&g, &AutOptions::default()).unwrap();
            assert_eq!(
                r.order.to_u64().unwrap() as usize,
                brute_force_order(&g),
                "{g:?}"
            );
        }
        assert_eq!(
            automorphism_group(&Graph::cycle(5), &AutOptions::default())
                .unwrap()
                .order,
            10.into()
        );
    }

    #[test]
    fn petersen_group() {
        let p = Graph::petersen();
        let r = automorphism_group(&p, &AutOptions::default()).unwrap();
        assert_eq!(r.order, 120.into());
        assert_eq!(r.orbit_count, 1);
        assert_eq!(brute_force_order(&p), 120);
        for s in &r.generators {
            assert!(is_automorphism(&p, s).unwrap());
        }
    }

    #[test]
    fn asymmetric_and_disconnected() {
        // Smallest asymmetric tree has 7 vertices.
        let t = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
        let r = automorphism_group(&t, &AutOptions::default()).unwrap();
        assert_eq!(r.order, 1.into());
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let r = automorphism_group(&two, &AutOptions::default()).unwrap();
        assert_eq!(r.order, 8.into());
        assert_eq!(r.orbit_count, 2);
    }

    #[test]
    fn ceiling_and_budget() {
        let g = gamma();
        let opts = AutOptions {
            max_vertices: 100,
            ..AutOptions::default()
        };
        assert!(matches!(
            automorphism_group(&g, &opts),
            Err(AutError::TooLarge { .. })
        ));
        let opts = AutOptions {
            node_budget: 3,
            ..AutOptions::default()
        };
        match automorphism_group(&g, &opts) {
            Err(AutError::BudgetExhausted { lower_bound, .. }) => {
                assert!(lower_bound >= GroupOrder::one())
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn subgroup_orders() {
        let g = gamma();
        let xy: Vec<_> = m11::generators()
            .iter()
            .map(|m| perm_from_matrix(m).unwrap())
            .collect();
        assert_eq!(verify_subgroup(&g, &xy).unwrap(), 7920.into());
        assert_eq!(verify_subgroup(&g, &[]).unwrap(), GroupOrder::one());
        let bad = Permutation::transposition(243, 0, 1);
        assert!(matches!(
            verify_subgroup(&g, &[xy[0].clone(), bad]),
            Err(AutError::NotAutomorphism { index: 1, .. })
        ));
    }

    #[test]
    fn linear_isomorphisms() {
        let s1 = m11::s1();
        let r = find_linear_cayley_isomorphism(&s1, &s1);
        let l = r.matrix.unwrap();
        assert_eq!(&s1.image(&l).unwrap(), s1.vectors());

        // Replace the pair ±(1,1,2,1,0) by ±(1,1,1,1,1): the set is no longer
        // an M11 orbit and no linear map reaches it.
        let mut half = m11::s1_half();
        half.pop();
        half.push(GfVector::from_digits("11111").unwrap());
        let broken = ConnectionSet::symmetric(5, half).unwrap();
        let r = find_linear_cayley_isomorphism(&s1, &broken);
        assert!(r.matrix.is_none());
        assert_eq!(r.candidates_examined, 22 * 21 * 20 * 19 * 18);
    }

    #[test]
    fn seeds_do_not_change_the_group() {
        let p = Graph::petersen();
        let plain = automorphism_group(&p, &AutOptions::default()).unwrap();
        let seeded = automorphism_group(
            &p,
            &AutOptions {
                seeds: vec![crate::graph::petersen_involution()],
                ..AutOptions::default()
            },
        )
        .unwrap();
        assert_eq!(plain.order, seeded.order);
        let bad = AutOptions {
            seeds: vec![Permutation::transposition(10, 0, 1)],
            ..AutOptions::default()
        };
        assert!(matches!(
            automorphism_group(&p, &bad),
            Err(AutError::NotAutomorphism { .. })
        ));
    }

    #[test]
    fn named_graph_groups() {
        let g = gamma();
        let plain = automorphism_group(&g, &AutOptions::default()).unwrap();
        assert_eq!(plain.order, 3_849_120.into());
        assert_eq!(plain.orbit_count, 1);
        assert_eq!(group_order(&plain.generators).unwrap(), plain.order);
        let affine = crate::named::affine_generators();
        let seeded = automorphism_group(
            &g,
            &AutOptions {
                seeds: affine.clone(),
                ..AutOptions::default()
            },
        )
        .unwrap();
        assert_eq!(seeded.order, plain.order);
        assert!(verify_subgroup(&g, &affine).unwrap() <= plain.order);

        let d = crate::named::delta();
        let r = automorphism_group(&d, &AutOptions::default()).unwrap();
        assert_eq!(r.order, 2592.into());
        assert!(r.generators.windows(2).all(|w| w[0] < w[1]));
        for s in &r.generators {
            assert!(is_automorphism(&d, s).unwrap());
        }
    }

    #[test]
    fn translations_are_automorphisms() {
        let g = gamma();
        for i in 0..5 {
            assert!(is_automorphism(&g, &translation_perm(&GfVector::unit(5, i))).unwrap());
        }
        assert_eq!(
            orbit_count(243, &[translation_perm(&GfVector::unit(5, 0))]),
            81
        );
    }
}
