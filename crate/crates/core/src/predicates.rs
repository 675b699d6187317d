//! Decision procedures for the edge-set properties the solvers reason about:
//! edge domination, edge cuts, minimal edge cut domination, private
//! neighbors, irredundance, and the cut-flavored irredundance/independence
//! properties with their maximality.
//!
//! These implementations follow the definitions clause for clause and favor
//! clarity over speed; the subset scans in `cutdom` have optimized
//! equivalents and are cross-checked against this module.
//!
//! All predicates are total over well-formed inputs. A precondition
//! violation (foreign edge set, disconnected graph where a cut is involved,
//! a maximality query on a set lacking the base property) is a structured
//! error, never a silent `false`.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

/// How the edge cut irredundance/independence definitions treat a set that
/// is not itself an edge cut.
///
/// `Literal` applies the definitions exactly as written; a set that is not an
/// edge cut satisfies them vacuously, because removing a member of a non-cut
/// leaves a non-cut. `Strict` additionally requires the set under test to be
/// an edge cut before it may qualify. `Literal` is the default everywhere;
/// the harness reports both.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Literal,
    Strict,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Literal => "literal",
            Mode::Strict => "strict",
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    Ok(())
}

fn require_member(g: &Graph, f: &EdgeSet, e: usize) -> Result<()> {
    g.check_owner(f)?;
    if e >= g.edge_count() {
        return Err(Error::EdgeIndexOutOfRange {
            index: e,
            m: g.edge_count(),
        });
    }
    if !f.contains(e) {
        return Err(Error::EdgeNotInSet { index: e });
    }
    Ok(())
}

/// True iff every edge outside `f` shares an endpoint with an edge of `f`.
/// The empty set dominates only the edgeless graph.
pub fn is_edge_dominating(g: &Graph, f: &EdgeSet) -> Result<bool> {
    g.check_owner(f)?;
    let mut touched = vec![false; g.vertex_count()];
    for e in f.iter() {
        let (u, v) = g.edge(e);
        touched[u] = true;
        touched[v] = true;
    }
    for x in 0..g.edge_count() {
        if f.contains(x) {
            continue;
        }
        let (u, v) = g.edge(x);
        if !touched[u] && !touched[v] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff deleting `f` disconnects the graph. Defined for connected
/// graphs only.
pub fn is_edge_cut(g: &Graph, f: &EdgeSet) -> Result<bool> {
    g.check_owner(f)?;
    require_connected(g)?;
    Ok(g.component_count(f)? >= 2)
}

/// Edge dominating and an edge cut at once.
pub fn is_edge_cut_dominating(g: &Graph, f: &EdgeSet) -> Result<bool> {
    Ok(is_edge_dominating(g, f)? && is_edge_cut(g, f)?)
}

/// True iff `f` is an edge cut dominating set and, for every member `e`,
/// `f - {e}` fails to dominate or fails to be an edge cut. Errors when `f`
/// is not edge cut dominating to begin with.
pub fn is_minimal_ecd(g: &Graph, f: &EdgeSet) -> Result<bool> {
    if !is_edge_cut_dominating(g, f)? {
        return Err(Error::NotEdgeCutDominating);
    }
    for e in f.iter() {
        let rest = f.without(e);
        if is_edge_dominating(g, &rest)? && is_edge_cut(g, &rest)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `e` is adjacent to no other member of `f`.
fn is_independent_in(g: &Graph, f: &EdgeSet, e: usize) -> bool {
    f.iter().all(|y| y == e || !g.edges_adjacent(e, y))
}

/// The edges outside `f` adjacent to `e` and to no other member of `f`.
/// Empty when `e`'s only claim to a private neighbor is being independent
/// in `f`.
pub fn private_neighbors(g: &Graph, f: &EdgeSet, e: usize) -> Result<EdgeSet> {
    require_member(g, f, e)?;
    let mut out = EdgeSet::empty(g.edge_count());
    for x in g.edge_neighbors(e)?.iter() {
        if f.contains(x) {
            continue;
        }
        if f.iter().all(|y| y == e || !g.edges_adjacent(x, y)) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// True iff `e` is independent in `f` or some edge outside `f` is adjacent
/// to `e` and to no other member of `f`.
pub fn has_private_neighbor(g: &Graph, f: &EdgeSet, e: usize) -> Result<bool> {
    require_member(g, f, e)?;
    if is_independent_in(g, f, e) {
        return Ok(true);
    }
    // allocation-free variant of `private_neighbors`: this runs inside the
    // claim checks for every member of every enumerated set
    let (u, v) = g.edge(e);
    for &x in g.incident_edges(u).iter().chain(g.incident_edges(v).iter()) {
        if x == e || f.contains(x) {
            continue;
        }
        if f.iter().all(|y| y == e || !g.edges_adjacent(x, y)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// True iff every member of `f` has a private neighbor.
pub fn is_irredundant_set(g: &Graph, f: &EdgeSet) -> Result<bool> {
    g.check_owner(f)?;
    for e in f.iter() {
        if !has_private_neighbor(g, f, e)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every member `e` of `f` is irredundant (has a private neighbor)
/// or `f - {e}` is not an edge cut. In `Strict` mode `f` itself must also be
/// an edge cut.
pub fn is_ec_irredundant(g: &Graph, f: &EdgeSet, mode: Mode) -> Result<bool> {
    g.check_owner(f)?;
    require_connected(g)?;
    if mode == Mode::Strict && !is_edge_cut(g, f)? {
        return Ok(false);
    }
    for e in f.iter() {
        if has_private_neighbor(g, f, e)? {
            continue;
        }
        if is_edge_cut(g, &f.without(e))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff no single-edge extension of `f` is edge cut irredundant in the
/// same mode. Errors when `f` itself is not edge cut irredundant.
pub fn is_maximal_ec_irredundant(g: &Graph, f: &EdgeSet, mode: Mode) -> Result<bool> {
    if !is_ec_irredundant(g, f, mode)? {
        return Err(Error::NotEcIrredundant);
    }
    for x in 0..g.edge_count() {
        if f.contains(x) {
            continue;
        }
        if is_ec_irredundant(g, &f.with(x), mode)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff every member `e` of `f` is independent in `f` or `f - {e}` is
/// not an edge cut. In `Strict` mode `f` itself must also be an edge cut.
pub fn is_ec_independent(g: &Graph, f: &EdgeSet, mode: Mode) -> Result<bool> {
    g.check_owner(f)?;
    require_connected(g)?;
    if mode == Mode::Strict && !is_edge_cut(g, f)? {
        return Ok(false);
    }
    for e in f.iter() {
        if is_independent_in(g, f, e) {
            continue;
        }
        if is_edge_cut(g, &f.without(e))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff no single-edge extension of `f` is edge cut independent in the
/// same mode. Errors when `f` itself is not edge cut independent.
pub fn is_maximal_ec_independent(g: &Graph, f: &EdgeSet, mode: Mode) -> Result<bool> {
    if !is_ec_independent(g, f, mode)? {
        return Err(Error::NotEcIndependent);
    }
    for x in 0..g.edge_count() {
        if f.contains(x) {
            continue;
        }
        if is_ec_independent(g, &f.with(x), mode)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn c4() -> Graph {
        families::cycle(4).unwrap()
    }

    fn set(g: &Graph, pairs: &[(usize, usize)]) -> EdgeSet {
        g.edge_set_from_pairs(pairs).unwrap()
    }

    #[test]
    fn edge_domination_examples() {
        let g = c4();
        assert!(is_edge_dominating(&g, &set(&g, &[(0, 1), (2, 3)])).unwrap());

        let k4 = families::complete(4).unwrap();
        assert!(!is_edge_dominating(&k4, &set(&k4, &[(0, 1)])).unwrap());

        let (f1, named) = families::figure1();
        assert!(!is_edge_dominating(&f1, &named).unwrap());

        // the empty set dominates only the edgeless graph
        let k1 = Graph::new(1, &[]).unwrap();
        assert!(is_edge_dominating(&k1, &EdgeSet::empty(0)).unwrap());
        assert!(!is_edge_dominating(&g, &EdgeSet::empty(4)).unwrap());
    }

    #[test]
    fn edge_cut_examples() {
        let k4 = families::complete(4).unwrap();
        assert!(!is_edge_cut(&k4, &set(&k4, &[(0, 1), (2, 3)])).unwrap());

        let (f1, named) = families::figure1();
        assert!(is_edge_cut(&f1, &named).unwrap());

        let k2 = families::complete(2).unwrap();
        assert!(is_edge_cut(&k2, &set(&k2, &[(0, 1)])).unwrap());

        let disconnected = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            is_edge_cut(&disconnected, &EdgeSet::empty(1)),
            Err(Error::DisconnectedGraph)
        ));
    }

    #[test]
    fn edge_cut_dominating_examples() {
        let (f2, named) = families::figure2();
        assert!(is_edge_cut_dominating(&f2, &named).unwrap());

        let g = c4();
        assert!(is_edge_cut_dominating(&g, &set(&g, &[(0, 1), (2, 3)])).unwrap());

        let (f1, named1) = families::figure1();
        assert!(!is_edge_cut_dominating(&f1, &named1).unwrap());
    }

    #[test]
    fn minimal_ecd_examples() {
        let (f2, named) = families::figure2();
        assert!(is_minimal_ecd(&f2, &named).unwrap());

        let k2 = families::complete(2).unwrap();
        assert!(is_minimal_ecd(&k2, &set(&k2, &[(0, 1)])).unwrap());

        let g = c4();
        let three = set(&g, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!is_minimal_ecd(&g, &three).unwrap());

        // precondition: the set must be edge cut dominating
        assert!(matches!(
            is_minimal_ecd(&g, &set(&g, &[(0, 1)])),
            Err(Error::NotEdgeCutDominating)
        ));
    }

    #[test]
    fn private_neighbor_examples() {
        let (f1, named) = families::figure1();
        let b = f1.edge_index(2, 3).unwrap();
        let privs = private_neighbors(&f1, &named, b).unwrap();
        assert_eq!(f1.pairs_of(&privs), vec![(3, 4)]);
        assert!(has_private_neighbor(&f1, &named, b).unwrap());

        let g = c4();
        let f = set(&g, &[(0, 1), (2, 3)]);
        let e01 = g.edge_index(0, 1).unwrap();
        // independence clause holds; no external private neighbors
        assert!(has_private_neighbor(&g, &f, e01).unwrap());
        assert!(private_neighbors(&g, &f, e01).unwrap().is_empty());

        let k3 = families::complete(3).unwrap();
        let all = EdgeSet::full(3);
        for e in 0..3 {
            assert!(!has_private_neighbor(&k3, &all, e).unwrap());
        }

        // membership is a precondition
        assert!(matches!(
            private_neighbors(&g, &f, g.edge_index(1, 2).unwrap()),
            Err(Error::EdgeNotInSet { .. })
        ));
    }

    #[test]
    fn irredundant_set_examples() {
        let (f1, named) = families::figure1();
        assert!(is_irredundant_set(&f1, &named).unwrap());

        let k3 = families::complete(3).unwrap();
        assert!(!is_irredundant_set(&k3, &EdgeSet::full(3)).unwrap());

        assert!(is_irredundant_set(&k3, &EdgeSet::empty(3)).unwrap());
    }

    #[test]
    fn ec_irredundant_examples() {
        let (f1, named) = families::figure1();
        assert!(is_ec_irredundant(&f1, &named, Mode::Literal).unwrap());

        let g = c4();
        let three = set(&g, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!is_ec_irredundant(&g, &three, Mode::Literal).unwrap());

        assert!(is_ec_irredundant(&g, &EdgeSet::empty(4), Mode::Literal).unwrap());
        // strict mode requires the set to be a cut
        assert!(!is_ec_irredundant(&g, &EdgeSet::empty(4), Mode::Strict).unwrap());
    }

    #[test]
    fn maximal_ec_irredundant_examples() {
        let (f1, named) = families::figure1();
        assert!(is_maximal_ec_irredundant(&f1, &named, Mode::Literal).unwrap());
        // the named set is itself a cut, so strict mode agrees here
        assert!(is_maximal_ec_irredundant(&f1, &named, Mode::Strict).unwrap());

        let g = c4();
        let single = set(&g, &[(0, 1)]);
        assert!(!is_maximal_ec_irredundant(&g, &single, Mode::Literal).unwrap());

        let k2 = families::complete(2).unwrap();
        assert!(is_maximal_ec_irredundant(&k2, &set(&k2, &[(0, 1)]), Mode::Literal).unwrap());

        let three = set(&g, &[(0, 1), (1, 2), (2, 3)]);
        assert!(matches!(
            is_maximal_ec_irredundant(&g, &three, Mode::Literal),
            Err(Error::NotEcIrredundant)
        ));
    }

    #[test]
    fn ec_independent_examples() {
        let (f2, named) = families::figure2();
        assert!(!is_ec_independent(&f2, &named, Mode::Literal).unwrap());

        let g = c4();
        let pair = set(&g, &[(0, 1), (2, 3)]);
        assert!(is_ec_independent(&g, &pair, Mode::Literal).unwrap());
        assert!(is_maximal_ec_independent(&g, &pair, Mode::Literal).unwrap());

        // the empty set is vacuously independent but never maximal when
        // edges exist: any singleton is edge cut independent
        let empty = EdgeSet::empty(4);
        assert!(is_ec_independent(&g, &empty, Mode::Literal).unwrap());
        assert!(!is_maximal_ec_independent(&g, &empty, Mode::Literal).unwrap());
    }

    #[test]
    fn strict_acceptance_implies_literal() {
        let (g, _) = families::figure2();
        let m = g.edge_count();
        for mask in 0..(1u32 << m) {
            let f = EdgeSet::from_indices(m, &mask_indices(mask, m)).unwrap();
            if is_ec_irredundant(&g, &f, Mode::Strict).unwrap() {
                assert!(is_ec_irredundant(&g, &f, Mode::Literal).unwrap());
            }
            if is_ec_independent(&g, &f, Mode::Strict).unwrap() {
                assert!(is_ec_independent(&g, &f, Mode::Literal).unwrap());
            }
            // independence implies irredundance in the same mode
            for mode in [Mode::Literal, Mode::Strict] {
                if is_ec_independent(&g, &f, mode).unwrap() {
                    assert!(is_ec_irredundant(&g, &f, mode).unwrap());
                }
            }
        }
    }

    #[test]
    fn non_cuts_have_no_cut_subsets() {
        let g = families::wheel(4).unwrap();
        let m = g.edge_count();
        for mask in 0..(1u32 << m) {
            let f = EdgeSet::from_indices(m, &mask_indices(mask, m)).unwrap();
            if !is_edge_cut(&g, &f).unwrap() {
                // drop one member at a time; monotonicity keeps them non-cuts
                for e in f.iter() {
                    assert!(!is_edge_cut(&g, &f.without(e)).unwrap());
                }
            }
        }
    }

    fn mask_indices(mask: u32, m: usize) -> Vec<usize> {
        (0..m).filter(|&i| mask >> i & 1 == 1).collect()
    }
}
