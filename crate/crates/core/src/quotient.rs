//! Invariant partitions, quotient graphs and the parameter system of an
//! imprimitive symmetric triple: block size `v`, trace size `k`, replication
//! `r`, quotient valency `b`, multiplicity `m`, pairwise trace intersection
//! `lambda` and its complement `lambda_bar = v - 2k + lambda`.
//!
//! Every parameter is recomputed over all representatives rather than trusted
//! from symmetry; a disagreement is reported as `RepresentativeDependent`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graphs::{self, Graph, GraphError};
use crate::permgroup::{ActionTable, GeneratedGroup, GroupError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuotientError {
    #[error("vertex {vertex} {problem}")]
    BadPartition { vertex: usize, problem: String },
    #[error("group degree {group} does not match vertex count {vertices}")]
    DegreeMismatch { group: usize, vertices: usize },
    #[error("quotient graph has no edges")]
    QuotientEmpty,
    #[error("parameter {parameter} depends on the representative: {detail}")]
    RepresentativeDependent { parameter: String, detail: String },
    #[error("identity {identity} fails: {detail}")]
    IdentityViolation { identity: String, detail: String },
    #[error("p = {p} does not equal v - k = {expected}")]
    PMismatch { p: usize, expected: usize },
    #[error("quotient valency {b} is below 2")]
    ValencyTooSmall { b: usize },
    #[error("traces cover the whole block (k = v); complements are empty")]
    EmptyTrace,
    #[error("complement blocks overlap: blocks {c} and {d} of block {block} share {size} vertices")]
    OverlappingTraces {
        block: usize,
        c: usize,
        d: usize,
        size: usize,
    },
    #[error("refinement blocks do not cover block {block}")]
    RefinementCoverage { block: usize },
    #[error("quotient is not symmetric under the induced action")]
    QuotientNotSymmetric,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One named pass/fail entry of a validation or classification report.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

/// A graph, an acting group and a vertex partition. Construction enforces the
/// structural shape (disjoint cover, matching degrees); the mathematical
/// invariants are checked by [`SymmetricTriple::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricTriple {
    graph: Graph,
    group: GeneratedGroup,
    partition: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl SymmetricTriple {
    pub fn new(
        graph: Graph,
        group: GeneratedGroup,
        partition: Vec<Vec<usize>>,
    ) -> Result<Self, QuotientError> {
        if group.degree() != graph.vertex_count() {
            return Err(QuotientError::DegreeMismatch {
                group: group.degree(),
                vertices: graph.vertex_count(),
            });
        }
        block_index_map(graph.vertex_count(), &partition)?;
        let mut partition: Vec<Vec<usize>> = partition
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        partition.sort();
        // Recompute after sorting so indices refer to the sorted order.
        let block_of = block_index_map(graph.vertex_count(), &partition)?;
        Ok(SymmetricTriple {
            graph,
            group,
            partition,
            block_of,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn group(&self) -> &GeneratedGroup {
        &self.group
    }

    pub fn partition(&self) -> &[Vec<usize>] {
        &self.partition
    }

    pub fn block_of(&self, vertex: usize) -> usize {
        self.block_of[vertex]
    }

    /// Full validation report: nontriviality, G-invariance, block
    /// independence (when the quotient has an edge) and G-symmetry of the
    /// graph. Failures are report entries, never errors.
    pub fn validate(&self) -> ValidationReport {
        let mut checks = Vec::new();
        let n = self.graph.vertex_count();
        checks.push(Check::new(
            "partition covers vertices disjointly",
            true,
            "enforced at construction",
        ));

        let size = self.partition[0].len();
        let uniform = self.partition.iter().all(|b| b.len() == size);
        let nontrivial = uniform && size > 1 && size < n;
        checks.push(Check::new(
            "partition nontrivial",
            nontrivial,
            if !uniform {
                "blocks have unequal sizes".to_string()
            } else {
                format!("block size {size} of {n} vertices")
            },
        ));

        let mut invariant = true;
        'outer: for (gi, g) in self.group.generators().iter().enumerate() {
            for (bi, block) in self.partition.iter().enumerate() {
                let target = self.block_of[g.apply(block[0])];
                for &x in block {
                    if self.block_of[g.apply(x)] != target {
                        let image: Vec<usize> = block.iter().map(|&y| g.apply(y)).collect();
                        checks.push(Check::new(
                            "partition G-invariant",
                            false,
                            format!("generator {gi} maps block {bi} {block:?} to {image:?}"),
                        ));
                        invariant = false;
                        break 'outer;
                    }
                }
            }
        }
        if invariant {
            checks.push(Check::new("partition G-invariant", true, ""));
        }

        let quotient = quotient_by_partition(&self.graph, &self.partition, &self.block_of);
        if quotient.edge_count() >= 1 {
            let mut independent = true;
            'blocks: for (bi, block) in self.partition.iter().enumerate() {
                for &x in block {
                    for &y in self.graph.neighbors(x) {
                        if self.block_of[y] == bi {
                            checks.push(Check::new(
                                "blocks independent",
                                false,
                                format!("edge ({x}, {y}) inside block {bi}"),
                            ));
                            independent = false;
                            break 'blocks;
                        }
                    }
                }
            }
            if independent {
                checks.push(Check::new("blocks independent", true, ""));
            }
        } else {
            checks.push(Check::new(
                "blocks independent",
                true,
                "not asserted: quotient has no edge",
            ));
        }

        match graphs::is_s_arc_transitive(&self.graph, &self.group, 1) {
            Ok(true) => checks.push(Check::new("graph G-symmetric", true, "")),
            Ok(false) => checks.push(Check::new(
                "graph G-symmetric",
                false,
                "group not transitive on vertices or arcs",
            )),
            Err(e) => checks.push(Check::new("graph G-symmetric", false, e.to_string())),
        }

        ValidationReport { checks }
    }

    /// The quotient graph on block indices together with the induced action.
    /// The quotient must itself be symmetric under the induced action.
    pub fn quotient(&self, bound: usize) -> Result<(Graph, ActionTable), QuotientError> {
        let quotient = quotient_by_partition(&self.graph, &self.partition, &self.block_of);
        let (table, _kernel) = self.group.induced_on_blocks(&self.partition, bound)?;
        if !graphs::is_s_arc_transitive(&quotient, &table.induced_group(), 1)? {
            return Err(QuotientError::QuotientNotSymmetric);
        }
        Ok((quotient, table))
    }

    /// The parameters (v, k, r, b, m), each proven independent of the chosen
    /// representative block, vertex or edge.
    pub fn parameters(&self) -> Result<Parameters, QuotientError> {
        raw_parameters(&self.graph, &self.partition, &self.block_of)
    }

    /// Pairwise trace intersections over all blocks and all unordered pairs
    /// of neighbouring blocks; `p` must equal `v - k`.
    pub fn lambda_pairwise(&self, p: usize) -> Result<LambdaReport, QuotientError> {
        let params = self.parameters()?;
        if params.b < 2 {
            return Err(QuotientError::ValencyTooSmall { b: params.b });
        }
        if p != params.v - params.k {
            return Err(QuotientError::PMismatch {
                p,
                expected: params.v - params.k,
            });
        }
        let quotient = quotient_by_partition(&self.graph, &self.partition, &self.block_of);
        let mut lambda: Option<usize> = None;
        let mut witness: Option<LambdaWitness> = None;
        let mut pair_count = 0usize;
        'outer: for (bi, block) in self.partition.iter().enumerate() {
            let nbrs = quotient.neighbors(bi);
            for (i, &c) in nbrs.iter().enumerate() {
                let trace_c = self.trace(block, c);
                for &d in &nbrs[i + 1..] {
                    pair_count += 1;
                    let trace_d = self.trace(block, d);
                    let inter = intersect_sorted(&trace_c, &trace_d).len();
                    match lambda {
                        None => lambda = Some(inter),
                        Some(l) if l != inter => {
                            witness = Some(LambdaWitness {
                                block: bi,
                                pair: (c, d),
                                value: inter,
                                expected: l,
                            });
                            break 'outer;
                        }
                        _ => {}
                    }
                }
            }
        }
        let status = match (lambda, witness) {
            (_, Some(w)) => LambdaStatus::NonConstant(w),
            (Some(l), None) => LambdaStatus::Constant(l),
            (None, None) => LambdaStatus::Constant(0), // b < 2 excluded above
        };
        let (lambda_bar, eq2, eq3, fisher) = match status {
            LambdaStatus::Constant(l) => {
                let Parameters { v, r, b, .. } = params;
                let bar = v + l - 2 * (v - p); // v - 2k + lambda with k = v - p
                let eq2 = v * r == b * (v - p);
                let eq3 = l * (b - 1) == (v - p) * (r - 1);
                let fisher = if l >= 1 { Some(b <= v) } else { None };
                (Some(bar), Some(eq2), Some(eq3), fisher)
            }
            LambdaStatus::NonConstant(_) => (None, None, None, None),
        };
        Ok(LambdaReport {
            status,
            lambda_bar,
            eq2,
            eq3,
            fisher,
            single_pair: pair_count == self.partition.len(),
        })
    }

    /// The refinement partition built from trace complements, applicable when
    /// the complements are pairwise disjoint (lambda constant with
    /// `lambda_bar = 0`).
    pub fn blocks_refinement(&self, bound: usize) -> Result<RefinementReport, QuotientError> {
        let params = self.parameters()?;
        if params.k == params.v {
            return Err(QuotientError::EmptyTrace);
        }
        if params.b < 2 {
            return Err(QuotientError::ValencyTooSmall { b: params.b });
        }
        let p = params.v - params.k;
        let quotient = quotient_by_partition(&self.graph, &self.partition, &self.block_of);

        let mut refined: Vec<Vec<usize>> = Vec::new();
        let mut hat: Vec<Vec<usize>> = Vec::with_capacity(self.partition.len());
        for (bi, block) in self.partition.iter().enumerate() {
            let nbrs = quotient.neighbors(bi);
            let complements: Vec<Vec<usize>> = nbrs
                .iter()
                .map(|&c| {
                    let trace = self.trace(block, c);
                    block
                        .iter()
                        .copied()
                        .filter(|x| trace.binary_search(x).is_err())
                        .collect()
                })
                .collect();
            for (i, ci) in complements.iter().enumerate() {
                for (j, cj) in complements.iter().enumerate().skip(i + 1) {
                    let size = intersect_sorted(ci, cj).len();
                    if size != 0 {
                        return Err(QuotientError::OverlappingTraces {
                            block: bi,
                            c: nbrs[i],
                            d: nbrs[j],
                            size,
                        });
                    }
                }
            }
            let covered: usize = complements.iter().map(|c| c.len()).sum();
            if covered != block.len() {
                return Err(QuotientError::RefinementCoverage { block: bi });
            }
            let start = refined.len();
            refined.extend(complements);
            hat.push((start..refined.len()).collect());
        }
        // Index by sorted order so the refinement is canonical.
        let mut order: Vec<usize> = (0..refined.len()).collect();
        order.sort_by(|&i, &j| refined[i].cmp(&refined[j]));
        let rank = {
            let mut rank = vec![0; refined.len()];
            for (new, &old) in order.iter().enumerate() {
                rank[old] = new;
            }
            rank
        };
        let refined: Vec<Vec<usize>> = {
            let mut sorted = vec![Vec::new(); order.len()];
            for (new, &old) in order.iter().enumerate() {
                sorted[new] = refined[old].clone();
            }
            sorted
        };
        let hat: Vec<Vec<usize>> = hat
            .into_iter()
            .map(|idxs| {
                let mut mapped: Vec<usize> = idxs.into_iter().map(|i| rank[i]).collect();
                mapped.sort_unstable();
                mapped
            })
            .collect();

        let a = params.b;
        if a * p != params.v {
            return Err(QuotientError::IdentityViolation {
                identity: "v = a * p".into(),
                detail: format!("v = {}, a = {a}, p = {p}", params.v),
            });
        }

        // G must act on the refinement blockwise; this also yields Gamma_P.
        let refined_block_of = block_index_map(self.graph.vertex_count(), &refined)?;
        let (p_table, _) = self.group.induced_on_blocks(&refined, bound)?;
        let gamma_p = quotient_by_partition(&self.graph, &refined, &refined_block_of);
        let hat_triple = SymmetricTriple::new(gamma_p.clone(), p_table.induced_group(), hat.clone())?;
        let hat_params = hat_triple.parameters()?;

        // Explicit correspondence: hat block i collects the refinement blocks
        // inside partition block i, so the double quotient must reproduce the
        // original quotient index-for-index.
        let hat_block_of = block_index_map(gamma_p.vertex_count(), &hat)?;
        let double = quotient_by_partition(&gamma_p, &hat, &hat_block_of);
        let quotient_correspondence = double == quotient;

        let p_params = raw_parameters(&self.graph, &refined, &refined_block_of)?;

        // s: valency of the bipartite graph Gamma_P[hat B, hat C].
        let mut s_values: BTreeSet<usize> = BTreeSet::new();
        for bi in 0..self.partition.len() {
            for &ci in quotient.neighbors(bi) {
                let left: Vec<usize> = hat[bi]
                    .iter()
                    .copied()
                    .filter(|&q| gamma_p.neighbors(q).iter().any(|&x| hat_block_of[x] == ci))
                    .collect();
                for &q in &left {
                    let d = gamma_p
                        .neighbors(q)
                        .iter()
                        .filter(|&&x| hat_block_of[x] == ci)
                        .count();
                    s_values.insert(d);
                }
            }
        }
        if s_values.len() != 1 {
            return Err(QuotientError::RepresentativeDependent {
                parameter: "s".into(),
                detail: format!("observed valencies {s_values:?}"),
            });
        }
        let s = *s_values.iter().next().unwrap();

        // t: blocks of P inside C containing a neighbour of a fixed vertex of
        // B meeting C; independence over the fixed vertex is verified.
        let mut t_value: Option<usize> = None;
        let mut t_independent = true;
        for (bi, block) in self.partition.iter().enumerate() {
            for &ci in quotient.neighbors(bi) {
                for &alpha in &self.trace(block, ci) {
                    let touched: BTreeSet<usize> = self
                        .graph
                        .neighbors(alpha)
                        .iter()
                        .copied()
                        .filter(|&y| self.block_of[y] == ci)
                        .map(|y| refined_block_of[y])
                        .collect();
                    match t_value {
                        None => t_value = Some(touched.len()),
                        Some(t) if t != touched.len() => t_independent = false,
                        _ => {}
                    }
                }
            }
        }
        let t = t_value.unwrap_or(0);

        let pt_identity = p * t == p_params.k * s;
        let case = if p_params.k == p && s == t {
            RefinementCase::KpEqualsP
        } else if p > 0 && s % p == 0 && s / p >= 1 && {
            let c = s / p;
            t == p_params.k * c && (a >= 1 && c <= (a - 1) / p.max(1))
        } {
            RefinementCase::SMultipleOfP { c: s / p }
        } else {
            RefinementCase::Inapplicable
        };

        Ok(RefinementReport {
            refined_partition: refined,
            hat_partition: hat,
            a,
            v_hat: hat_params.v,
            k_hat: hat_params.k,
            b_hat: hat_params.b,
            r_hat: hat_params.r,
            s,
            t,
            t_independent,
            pt_identity,
            quotient_correspondence,
            case,
        })
    }

    /// Sorted trace of block `c` on the given block: the vertices of `block`
    /// with a neighbour in `c`.
    pub(crate) fn trace(&self, block: &[usize], c: usize) -> Vec<usize> {
        block
            .iter()
            .copied()
            .filter(|&x| {
                self.graph
                    .neighbors(x)
                    .iter()
                    .any(|&y| self.block_of[y] == c)
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// The parameter system of a triple. Satisfies `v * r = b * k` exactly and
/// `m` divides both `r` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Parameters {
    /// Block size.
    pub v: usize,
    /// Trace size `|B ∩ Γ(C)|` for adjacent blocks.
    pub k: usize,
    /// Number of blocks containing a neighbour of a fixed vertex.
    pub r: usize,
    /// Quotient valency.
    pub b: usize,
    /// Number of neighbouring blocks inducing one and the same trace.
    pub m: usize,
}

impl Parameters {
    /// `v - k`; the prime `p` of the classification when it is one.
    pub fn p(&self) -> usize {
        self.v - self.k
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct LambdaWitness {
    pub block: usize,
    pub pair: (usize, usize),
    pub value: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum LambdaStatus {
    Constant(usize),
    NonConstant(LambdaWitness),
}

/// Outcome of the pairwise trace-intersection scan, with the identity checks
/// `v r = b (v - p)`, `lambda (b - 1) = (v - p)(r - 1)` and Fisher's
/// inequality `b <= v` (the latter only when `lambda >= 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaReport {
    pub status: LambdaStatus,
    pub lambda_bar: Option<usize>,
    pub eq2: Option<bool>,
    pub eq3: Option<bool>,
    pub fisher: Option<bool>,
    /// Set when b = 2 leaves a single pair per block, making constancy vacuous.
    pub single_pair: bool,
}

impl LambdaReport {
    pub fn constant_lambda(&self) -> Option<usize> {
        match self.status {
            LambdaStatus::Constant(l) => Some(l),
            LambdaStatus::NonConstant(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum RefinementCase {
    /// Case (i): the refinement trace equals `p` and `s = t`.
    KpEqualsP,
    /// Case (ii): `s = p c` and `t = k_P c`.
    SMultipleOfP { c: usize },
    Inapplicable,
}

/// Report of the trace-complement refinement (the partition `P`), the grouped
/// partition of `P` by original blocks, and the parameters of the refined
/// quotient pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementReport {
    pub refined_partition: Vec<Vec<usize>>,
    /// For each original block, the sorted indices of its refinement blocks.
    pub hat_partition: Vec<Vec<usize>>,
    /// Refinement blocks per original block.
    pub a: usize,
    pub v_hat: usize,
    pub k_hat: usize,
    pub b_hat: usize,
    pub r_hat: usize,
    /// Valency of the bipartite graph between adjacent hat blocks.
    pub s: usize,
    /// Refinement blocks in an adjacent block touched by a fixed trace vertex.
    pub t: usize,
    /// Whether `t` was independent of the fixed vertex.
    pub t_independent: bool,
    /// Whether `p t = k_P s` held.
    pub pt_identity: bool,
    /// Whether the double quotient reproduced the original quotient.
    pub quotient_correspondence: bool,
    pub case: RefinementCase,
}

/// Parameters computed against an arbitrary partition (no nontriviality
/// requirement, so refinements with singleton blocks are allowed).
pub fn raw_parameters(
    graph: &Graph,
    partition: &[Vec<usize>],
    block_of: &[usize],
) -> Result<Parameters, QuotientError> {
    let quotient = quotient_by_partition(graph, partition, block_of);
    if quotient.edge_count() == 0 {
        return Err(QuotientError::QuotientEmpty);
    }

    let v = partition[0].len();
    if let Some(bad) = partition.iter().position(|b| b.len() != v) {
        return Err(QuotientError::RepresentativeDependent {
            parameter: "v".into(),
            detail: format!("block {bad} has size {} instead of {v}", partition[bad].len()),
        });
    }

    let b = quotient.degree(0);
    if let Some(bad) = (0..quotient.vertex_count()).find(|&i| quotient.degree(i) != b) {
        return Err(QuotientError::RepresentativeDependent {
            parameter: "b".into(),
            detail: format!("block {bad} has quotient degree {}", quotient.degree(bad)),
        });
    }

    let mut k: Option<usize> = None;
    let mut m: Option<usize> = None;
    for (bi, block) in partition.iter().enumerate() {
        let nbrs = quotient.neighbors(bi);
        let traces: Vec<Vec<usize>> = nbrs.iter().map(|&c| trace_of(graph, block, c, block_of)).collect();
        for (ti, trace) in traces.iter().enumerate() {
            match k {
                None => k = Some(trace.len()),
                Some(kv) if kv != trace.len() => {
                    return Err(QuotientError::RepresentativeDependent {
                        parameter: "k".into(),
                        detail: format!(
                            "trace of block {} on block {bi} has size {}",
                            nbrs[ti],
                            trace.len()
                        ),
                    })
                }
                _ => {}
            }
            let mult = traces.iter().filter(|t| *t == trace).count();
            match m {
                None => m = Some(mult),
                Some(mv) if mv != mult => {
                    return Err(QuotientError::RepresentativeDependent {
                        parameter: "m".into(),
                        detail: format!(
                            "trace of block {} on block {bi} occurs {mult} times",
                            nbrs[ti]
                        ),
                    })
                }
                _ => {}
            }
        }
    }
    let k = k.expect("quotient has an edge");
    let m = m.expect("quotient has an edge");

    let mut r: Option<usize> = None;
    for alpha in 0..graph.vertex_count() {
        let blocks: BTreeSet<usize> = graph
            .neighbors(alpha)
            .iter()
            .map(|&y| block_of[y])
            .filter(|&c| c != block_of[alpha])
            .collect();
        match r {
            None => r = Some(blocks.len()),
            Some(rv) if rv != blocks.len() => {
                return Err(QuotientError::RepresentativeDependent {
                    parameter: "r".into(),
                    detail: format!("vertex {alpha} meets {} blocks", blocks.len()),
                })
            }
            _ => {}
        }
    }
    let r = r.expect("graph nonempty");

    if v * r != b * k {
        return Err(QuotientError::IdentityViolation {
            identity: "v r = b k".into(),
            detail: format!("{v} * {r} != {b} * {k}"),
        });
    }
    if m == 0 || r % m != 0 || b % m != 0 {
        return Err(QuotientError::IdentityViolation {
            identity: "m divides r and b".into(),
            detail: format!("m = {m}, r = {r}, b = {b}"),
        });
    }

    Ok(Parameters { v, k, r, b, m })
}

fn trace_of(graph: &Graph, block: &[usize], c: usize, block_of: &[usize]) -> Vec<usize> {
    block
        .iter()
        .copied()
        .filter(|&x| graph.neighbors(x).iter().any(|&y| block_of[y] == c))
        .collect()
}

/// Quotient graph: blocks adjacent when joined by at least one edge.
pub fn quotient_by_partition(graph: &Graph, partition: &[Vec<usize>], block_of: &[usize]) -> Graph {
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, v) in graph.edges() {
        let (bu, bv) = (block_of[u], block_of[v]);
        if bu != bv {
            edges.insert((bu.min(bv), bu.max(bv)));
        }
    }
    let edges: Vec<(usize, usize)> = edges.into_iter().collect();
    Graph::from_edges(partition.len(), &edges).expect("quotient is simple")
}

fn block_index_map(n: usize, partition: &[Vec<usize>]) -> Result<Vec<usize>, QuotientError> {
    let mut block_of = vec![usize::MAX; n];
    for (bi, block) in partition.iter().enumerate() {
        for &x in block {
            if x >= n {
                return Err(QuotientError::BadPartition {
                    vertex: x,
                    problem: format!("out of range for {n} vertices"),
                });
            }
            if block_of[x] != usize::MAX {
                return Err(QuotientError::BadPartition {
                    vertex: x,
                    problem: "appears in more than one block".into(),
                });
            }
            block_of[x] = bi;
        }
    }
    if let Some(missing) = block_of.iter().position(|&b| b == usize::MAX) {
        return Err(QuotientError::BadPartition {
            vertex: missing,
            problem: "not covered by the partition".into(),
        });
    }
    Ok(block_of)
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_BOUND;

    fn c6_antipodal() -> SymmetricTriple {
        SymmetricTriple::new(
            Graph::cycle(6).unwrap(),
            GeneratedGroup::dihedral(6),
            vec![vec![0, 3], vec![1, 4], vec![2, 5]],
        )
        .unwrap()
    }

    #[test]
    fn antipodal_triple_is_valid() {
        let report = c6_antipodal().validate();
        assert!(report.is_valid(), "{:?}", report.failures());
    }

    #[test]
    fn singleton_partition_is_trivial() {
        let t = SymmetricTriple::new(
            Graph::cycle(6).unwrap(),
            GeneratedGroup::dihedral(6),
            (0..6).map(|i| vec![i]).collect(),
        )
        .unwrap();
        let report = t.validate();
        assert!(!report.is_valid());
        assert!(report
            .failures()
            .iter()
            .any(|c| c.name == "partition nontrivial"));
    }

    #[test]
    fn consecutive_pairs_are_not_invariant() {
        let t = SymmetricTriple::new(
            Graph::cycle(6).unwrap(),
            GeneratedGroup::dihedral(6),
            vec![vec![0, 1], vec![2, 3], vec![4, 5]],
        )
        .unwrap();
        let report = t.validate();
        assert!(!report.is_valid());
        let failure = report
            .failures()
            .iter()
            .find(|c| c.name == "partition G-invariant")
            .unwrap()
            .detail
            .clone();
        assert!(failure.contains("maps block"), "{failure}");
    }

    #[test]
    fn overlapping_partition_names_vertex() {
        let err = SymmetricTriple::new(
            Graph::cycle(6).unwrap(),
            GeneratedGroup::dihedral(6),
            vec![vec![0, 3], vec![3, 4], vec![1, 2, 5]],
        )
        .unwrap_err();
        match err {
            QuotientError::BadPartition { vertex, .. } => assert_eq!(vertex, 3),
            other => panic!("unexpected: {other}"),
        }
    }

    #[test]
    fn antipodal_quotient_is_k3() {
        let (q, table) = c6_antipodal().quotient(DEFAULT_BOUND).unwrap();
        assert_eq!(q, Graph::complete(3));
        assert_eq!(table.induced_group().order(DEFAULT_BOUND).unwrap(), 6);
    }

    #[test]
    fn antipodal_parameters() {
        // Both neighbouring blocks trace the full block, so m = 2.
        let params = c6_antipodal().parameters().unwrap();
        assert_eq!(
            params,
            Parameters {
                v: 2,
                k: 2,
                r: 2,
                b: 2,
                m: 2
            }
        );
        assert_eq!(params.v * params.r, params.b * params.k);
    }

    #[test]
    fn antipodal_lambda_single_pair() {
        let report = c6_antipodal().lambda_pairwise(0).unwrap();
        assert!(report.single_pair);
        assert_eq!(report.constant_lambda(), Some(2));
        assert_eq!(report.lambda_bar, Some(0));
    }

    #[test]
    fn refinement_rejects_full_trace() {
        // k = v here, so the complements are empty.
        assert_eq!(
            c6_antipodal().blocks_refinement(DEFAULT_BOUND),
            Err(QuotientError::EmptyTrace)
        );
    }

    #[test]
    fn lambda_rejects_wrong_p() {
        let err = c6_antipodal().lambda_pairwise(3).unwrap_err();
        assert!(matches!(err, QuotientError::PMismatch { p: 3, expected: 0 }));
    }

    // Deeper parameter and refinement tests (arc-pair and 3-arc-graph
    // triples) live with the constructions that build them.
}
