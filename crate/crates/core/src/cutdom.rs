//! Exact computation of the edge cut parameters: gamma_ct by
//! ascending-cardinality search, and the extremal parameters Gamma_ct,
//! ir_ct, IR_ct, i_ct, beta_ct by a full scan over all 2^m edge subsets.
//!
//! The extremal parameters take a minimum or maximum over *maximal* or
//! *minimal* families, which admits no cardinality-ordered early exit, so the
//! scan is exhaustive by design and gated by a cap on m. The scan classifies
//! subsets with bitmask arithmetic; every witness it returns is re-checked
//! through the clause-for-clause predicates before being handed out.

use crate::classical::{edge_connectivity, ParamResult};
use crate::combi::each_k_subset;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, UnionFind};
use crate::predicates::{self, Mode};

/// Default cap on m for the ascending gamma_ct search.
pub const DEFAULT_GAMMA_CT_CAP: usize = 28;
/// Default cap on m for the full-subset extremal scan.
pub const DEFAULT_PROFILE_CAP: usize = 20;
/// Hard ceiling for the extremal scan: the classification tables hold
/// 2^m bits each.
pub const MAX_PROFILE_CAP: usize = 26;

/// An extremal value together with the set achieving it. Among optimal sets
/// the witness is the smallest as a bit string with edge 0 in the least
/// significant position (the first optimum in ascending subset-mask order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremum {
    pub size: usize,
    pub witness: EdgeSet,
}

/// All six edge cut parameters of one graph under one interpretation mode.
///
/// `gamma_ct`/`upper_gamma_ct` range over minimal edge cut dominating sets
/// and never depend on the mode. The four remaining parameters range over
/// maximal edge cut irredundant / independent sets; a family can be empty in
/// strict mode, in which case its extrema are `None` ("undefined") rather
/// than 0, and its count is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtProfile {
    pub mode: Mode,
    pub gamma_ct: Extremum,
    pub upper_gamma_ct: Extremum,
    pub minimal_ecd_count: u64,
    pub ir_ct: Option<Extremum>,
    pub upper_ir_ct: Option<Extremum>,
    pub maximal_ec_irredundant_count: u64,
    pub i_ct: Option<Extremum>,
    pub beta_ct: Option<Extremum>,
    pub maximal_ec_independent_count: u64,
}

/// Edge cut domination number: ascending-cardinality search starting at
/// k = lambda(g), which is a valid lower bound since every edge cut
/// dominating set is an edge cut. The first edge-cut-dominating k-subset in
/// lexicographic order is the witness.
pub fn gamma_ct(g: &Graph, cap: usize) -> Result<ParamResult> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let m = g.edge_count();
    if m > cap {
        return Err(Error::CapExceeded { op: "gamma_ct", m, cap });
    }
    let lambda = edge_connectivity(g)?.value;
    let mut dom = crate::classical::DominationChecker::new(g);
    let mut cut = crate::classical::CutChecker::new(g);
    let mut examined = 0u64;
    for k in lambda..=m {
        let mut hit: Option<Vec<usize>> = None;
        each_k_subset(m, k, |subset| {
            examined += 1;
            if dom.is_dominating(g, subset) && cut.is_cut(g, subset) {
                hit = Some(subset.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(subset) = hit {
            let witness = EdgeSet::from_indices(m, &subset).expect("edge indices");
            debug_assert!(predicates::is_edge_cut_dominating(g, &witness).unwrap());
            return Ok(ParamResult {
                name: "gamma_ct",
                value: k,
                witness,
                subsets_examined: examined,
            });
        }
    }
    unreachable!("the full edge set is always edge cut dominating for n >= 2");
}

// Per-subset classification bits for the whole 2^m range.
struct Scan {
    m: usize,
    cut: BitTable,
    ecir_literal: BitTable,
    eci_literal: BitTable,
    minimal_ecd: BitTable,
    minimal_count: u64,
    gamma: (usize, u64),     // (size, mask) of the first minimum
    upper_gamma: (usize, u64),
}

fn scan(g: &Graph, cap: usize) -> Result<Scan> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let m = g.edge_count();
    let effective_cap = cap.min(MAX_PROFILE_CAP);
    if m > effective_cap {
        return Err(Error::CapExceeded {
            op: "extremal scan",
            m,
            cap: effective_cap,
        });
    }
    let n = g.vertex_count();
    let full: u64 = if m == 64 { !0 } else { (1u64 << m) - 1 };

    // adjacency masks: adj[e] excludes e, closed[e] includes it
    let mut adj = vec![0u64; m];
    for e in 0..m {
        let (u, v) = g.edge(e);
        for &x in g.incident_edges(u).iter().chain(g.incident_edges(v).iter()) {
            if x != e {
                adj[e] |= 1u64 << x;
            }
        }
    }
    let closed: Vec<u64> = adj.iter().enumerate().map(|(e, &a)| a | 1u64 << e).collect();

    let count = 1usize << m;
    let mut out = Scan {
        m,
        cut: BitTable::new(count),
        ecir_literal: BitTable::new(count),
        eci_literal: BitTable::new(count),
        minimal_ecd: BitTable::new(count),
        minimal_count: 0,
        gamma: (usize::MAX, 0),
        upper_gamma: (0, 0),
    };

    let mut uf = UnionFind::new(n);
    for mask in 0..count as u64 {
        // components of the graph with `mask` removed
        uf.reset(n);
        for e in 0..m {
            if mask >> e & 1 == 0 {
                let (u, v) = g.edge(e);
                uf.union(u, v);
            }
        }
        let comps = uf.components();
        let is_cut = comps >= 2;
        if is_cut {
            out.cut.set(mask as usize);
        }

        // members whose removal leaves a dominating set are exactly those
        // without a private neighbor, so mark external private neighbors in
        // one pass over the outside edges
        let mut ext_private = 0u64;
        let mut outside = full & !mask;
        while outside != 0 {
            let x = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let dominators = adj[x] & mask;
            if dominators != 0 && dominators & (dominators - 1) == 0 {
                ext_private |= dominators;
            }
        }

        let mut dominated = 0u64;
        let mut ecir = true;
        let mut eci = true;
        let mut members = mask;
        while members != 0 {
            let e = members.trailing_zeros() as usize;
            members &= members - 1;
            dominated |= closed[e];
            let independent = adj[e] & mask == 0;
            let has_private = independent || ext_private >> e & 1 == 1;
            // mask - {e} fails to be a cut iff putting e back reconnects
            let minus_not_cut = comps == 1 || {
                let (u, v) = g.edge(e);
                comps == 2 && uf.find(u) != uf.find(v)
            };
            if !(has_private || minus_not_cut) {
                ecir = false;
            }
            if !(independent || minus_not_cut) {
                eci = false;
            }
        }
        if ecir {
            out.ecir_literal.set(mask as usize);
        }
        if eci {
            out.eci_literal.set(mask as usize);
        }

        // a dominating cut is minimal exactly when every member either has a
        // private neighbor (removal breaks domination) or keeps the cut
        // property from its removal (removal breaks the cut); that predicate
        // coincides with `ecir` above
        if is_cut && dominated == full && ecir {
            out.minimal_ecd.set(mask as usize);
            out.minimal_count += 1;
            let size = mask.count_ones() as usize;
            if size < out.gamma.0 {
                out.gamma = (size, mask);
            }
            if out.minimal_count == 1 || size > out.upper_gamma.0 {
                out.upper_gamma = (size, mask);
            }
        }
    }
    debug_assert!(out.minimal_count > 0, "the full edge set peels to a minimal ECD");
    Ok(out)
}

impl Scan {
    fn has_property(&self, table: &BitTable, mode: Mode, mask: u64) -> bool {
        table.get(mask as usize) && (mode == Mode::Literal || self.cut.get(mask as usize))
    }

    /// Extrema and count over the maximal sets of one property table.
    fn maximal_extrema(&self, table: &BitTable, mode: Mode) -> (Option<Extremum>, Option<Extremum>, u64) {
        let mut min: Option<(usize, u64)> = None;
        let mut max: Option<(usize, u64)> = None;
        let mut count = 0u64;
        for mask in 0..(1u64 << self.m) {
            if !self.has_property(table, mode, mask) {
                continue;
            }
            let mut maximal = true;
            for x in 0..self.m {
                if mask >> x & 1 == 0 && self.has_property(table, mode, mask | 1 << x) {
                    maximal = false;
                    break;
                }
            }
            if !maximal {
                continue;
            }
            count += 1;
            let size = mask.count_ones() as usize;
            if min.is_none_or(|(s, _)| size < s) {
                min = Some((size, mask));
            }
            if max.is_none_or(|(s, _)| size > s) {
                max = Some((size, mask));
            }
        }
        let wrap = |opt: Option<(usize, u64)>| {
            opt.map(|(size, mask)| Extremum {
                size,
                witness: EdgeSet::from_mask(self.m, mask),
            })
        };
        (wrap(min), wrap(max), count)
    }
}

/// Classifies every edge subset of `g` and reports all six parameters in the
/// given mode. Witnesses are self-checked through the predicates module.
pub fn ct_profile(g: &Graph, mode: Mode, cap: usize) -> Result<CtProfile> {
    let s = scan(g, cap)?;
    let (ir, upper_ir, ecir_count) = s.maximal_extrema(&s.ecir_literal, mode);
    let (i_ct, beta_ct, eci_count) = s.maximal_extrema(&s.eci_literal, mode);

    let profile = CtProfile {
        mode,
        gamma_ct: Extremum {
            size: s.gamma.0,
            witness: EdgeSet::from_mask(s.m, s.gamma.1),
        },
        upper_gamma_ct: Extremum {
            size: s.upper_gamma.0,
            witness: EdgeSet::from_mask(s.m, s.upper_gamma.1),
        },
        minimal_ecd_count: s.minimal_count,
        ir_ct: ir,
        upper_ir_ct: upper_ir,
        maximal_ec_irredundant_count: ecir_count,
        i_ct,
        beta_ct,
        maximal_ec_independent_count: eci_count,
    };
    self_check(g, &profile);
    Ok(profile)
}

fn self_check(g: &Graph, p: &CtProfile) {
    assert!(
        predicates::is_minimal_ecd(g, &p.gamma_ct.witness).unwrap_or(false),
        "gamma_ct witness must be a minimal edge cut dominating set"
    );
    assert!(
        predicates::is_minimal_ecd(g, &p.upper_gamma_ct.witness).unwrap_or(false),
        "Gamma_ct witness must be a minimal edge cut dominating set"
    );
    for ext in [&p.ir_ct, &p.upper_ir_ct].into_iter().flatten() {
        assert!(
            predicates::is_maximal_ec_irredundant(g, &ext.witness, p.mode).unwrap_or(false),
            "irredundance witness must be maximal edge cut irredundant"
        );
    }
    for ext in [&p.i_ct, &p.beta_ct].into_iter().flatten() {
        assert!(
            predicates::is_maximal_ec_independent(g, &ext.witness, p.mode).unwrap_or(false),
            "independence witness must be maximal edge cut independent"
        );
    }
}

/// All minimal edge cut dominating sets, in ascending subset-mask order.
pub fn enumerate_minimal_ecd(g: &Graph, cap: usize) -> Result<Vec<EdgeSet>> {
    let s = scan(g, cap)?;
    Ok((0..(1u64 << s.m))
        .filter(|&mask| s.minimal_ecd.get(mask as usize))
        .map(|mask| EdgeSet::from_mask(s.m, mask))
        .collect())
}

/// All maximal edge cut irredundant sets in the given mode, in ascending
/// subset-mask order.
pub fn enumerate_maximal_ec_irredundant(g: &Graph, mode: Mode, cap: usize) -> Result<Vec<EdgeSet>> {
    let s = scan(g, cap)?;
    Ok(collect_maximal(&s, &s.ecir_literal, mode))
}

/// All maximal edge cut independent sets in the given mode, in ascending
/// subset-mask order.
pub fn enumerate_maximal_ec_independent(g: &Graph, mode: Mode, cap: usize) -> Result<Vec<EdgeSet>> {
    let s = scan(g, cap)?;
    Ok(collect_maximal(&s, &s.eci_literal, mode))
}

fn collect_maximal(s: &Scan, table: &BitTable, mode: Mode) -> Vec<EdgeSet> {
    let mut out = Vec::new();
    for mask in 0..(1u64 << s.m) {
        if !s.has_property(table, mode, mask) {
            continue;
        }
        let extendable =
            (0..s.m).any(|x| mask >> x & 1 == 0 && s.has_property(table, mode, mask | 1 << x));
        if !extendable {
            out.push(EdgeSet::from_mask(s.m, mask));
        }
    }
    out
}

struct BitTable {
    words: Vec<u64>,
}

impl BitTable {
    fn new(len: usize) -> Self {
        BitTable {
            words: vec![0; len.div_ceil(64).max(1)],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn gamma_ct_closed_form_spot_checks() {
        let cap = DEFAULT_GAMMA_CT_CAP;
        assert_eq!(gamma_ct(&families::complete(5).unwrap(), cap).unwrap().value, 4);
        assert_eq!(gamma_ct(&families::cycle(7).unwrap(), cap).unwrap().value, 3);
        assert_eq!(gamma_ct(&families::wheel(6).unwrap(), cap).unwrap().value, 4);
        assert_eq!(
            gamma_ct(&families::complete_bipartite(3, 2).unwrap(), cap).unwrap().value,
            2
        );
        assert_eq!(gamma_ct(&families::path(7).unwrap(), cap).unwrap().value, 2);
    }

    #[test]
    fn gamma_ct_figure2_witness() {
        let (g, _) = families::figure2();
        let r = gamma_ct(&g, DEFAULT_GAMMA_CT_CAP).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(g.pairs_of(&r.witness), vec![(1, 3), (2, 4)]);
    }

    #[test]
    fn gamma_ct_preconditions() {
        let single = Graph::new(1, &[]).unwrap();
        assert!(matches!(gamma_ct(&single, 28), Err(Error::TooFewVertices)));
        let disc = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(gamma_ct(&disc, 28), Err(Error::DisconnectedGraph)));
        let k4 = families::complete(4).unwrap();
        assert!(matches!(
            gamma_ct(&k4, 5),
            Err(Error::CapExceeded { op: "gamma_ct", m: 6, cap: 5 })
        ));
    }

    #[test]
    fn c4_profile_is_all_twos() {
        let g = families::cycle(4).unwrap();
        let p = ct_profile(&g, Mode::Literal, DEFAULT_PROFILE_CAP).unwrap();
        assert_eq!(p.gamma_ct.size, 2);
        assert_eq!(p.upper_gamma_ct.size, 2);
        assert_eq!(p.ir_ct.as_ref().unwrap().size, 2);
        assert_eq!(p.upper_ir_ct.as_ref().unwrap().size, 2);
        assert_eq!(p.i_ct.as_ref().unwrap().size, 2);
        assert_eq!(p.beta_ct.as_ref().unwrap().size, 2);
        // all six families consist of exactly the six 2-subsets
        assert_eq!(p.minimal_ecd_count, 6);
        assert_eq!(p.maximal_ec_irredundant_count, 6);
        assert_eq!(p.maximal_ec_independent_count, 6);
    }

    #[test]
    fn k2_profile_is_all_ones() {
        let g = families::complete(2).unwrap();
        for mode in [Mode::Literal, Mode::Strict] {
            let p = ct_profile(&g, mode, DEFAULT_PROFILE_CAP).unwrap();
            assert_eq!(p.gamma_ct.size, 1);
            assert_eq!(p.upper_gamma_ct.size, 1);
            assert_eq!(p.ir_ct.as_ref().unwrap().size, 1);
            assert_eq!(p.upper_ir_ct.as_ref().unwrap().size, 1);
            assert_eq!(p.i_ct.as_ref().unwrap().size, 1);
            assert_eq!(p.beta_ct.as_ref().unwrap().size, 1);
            assert_eq!(p.minimal_ecd_count, 1);
        }
    }

    #[test]
    fn figure2_gamma_vs_upper_gamma() {
        let (g, named) = families::figure2();
        let p = ct_profile(&g, Mode::Literal, DEFAULT_PROFILE_CAP).unwrap();
        assert_eq!(p.gamma_ct.size, 2);
        assert!(p.upper_gamma_ct.size >= 3);
        // the caption set is among the minimal ECDs
        let all = enumerate_minimal_ecd(&g, DEFAULT_PROFILE_CAP).unwrap();
        assert!(all.contains(&named));
    }

    #[test]
    fn minimal_ecd_enumeration_examples() {
        let k2 = families::complete(2).unwrap();
        let sets = enumerate_minimal_ecd(&k2, DEFAULT_PROFILE_CAP).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0], EdgeSet::full(1));

        let c4 = families::cycle(4).unwrap();
        let sets = enumerate_minimal_ecd(&c4, DEFAULT_PROFILE_CAP).unwrap();
        assert_eq!(sets.len(), 6);
        assert!(sets.contains(&c4.edge_set_from_pairs(&[(0, 1), (2, 3)]).unwrap()));
        assert!(sets.contains(&c4.edge_set_from_pairs(&[(0, 1), (1, 2)]).unwrap()));
    }

    #[test]
    fn profile_modes_agree_on_gamma_parameters() {
        let (g, _) = families::figure1();
        let lit = ct_profile(&g, Mode::Literal, DEFAULT_PROFILE_CAP).unwrap();
        let strict = ct_profile(&g, Mode::Strict, DEFAULT_PROFILE_CAP).unwrap();
        assert_eq!(lit.gamma_ct, strict.gamma_ct);
        assert_eq!(lit.upper_gamma_ct, strict.upper_gamma_ct);
        assert_eq!(lit.minimal_ecd_count, strict.minimal_ecd_count);
    }

    #[test]
    fn profile_matches_standalone_gamma_ct() {
        for g in families::all_connected_graphs(4).unwrap() {
            let p = ct_profile(&g, Mode::Literal, DEFAULT_PROFILE_CAP).unwrap();
            let r = gamma_ct(&g, DEFAULT_GAMMA_CT_CAP).unwrap();
            assert_eq!(p.gamma_ct.size, r.value);
        }
    }

    #[test]
    fn scan_cap_is_enforced() {
        let g = families::complete(5).unwrap(); // m = 10
        assert!(matches!(
            ct_profile(&g, Mode::Literal, 9),
            Err(Error::CapExceeded { .. })
        ));
    }
}
