//! Built-in example catalog. Keys are frozen identifiers; each entry
//! constructs its triple, design or graph together with the correct acting
//! group.

use thiserror::Error;

use crate::constructions::{
    self, affine_orbit_design, arc_pair_triple, gamma2_triple, matched_cycle_chain,
    three_arc_graph_triple, ConstructError,
};
use crate::designs::IncidenceStructure;
use crate::graphs::{two_subsets, Graph, GraphError};
use crate::permgroup::{GeneratedGroup, GroupError, Permutation};
use crate::quotient::{QuotientError, SymmetricTriple};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("bad parameter in key `{key}`: {reason}")]
    BadParameter { key: String, reason: String },
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
}

/// A catalog entry: a triple ready for analysis, a design with its acting
/// group, or a graph with a group for orbit enumeration.
#[derive(Debug, Clone)]
pub enum CatalogObject {
    Triple(SymmetricTriple),
    Design {
        design: IncidenceStructure,
        group: GeneratedGroup,
    },
    Graph {
        graph: Graph,
        group: GeneratedGroup,
    },
}

/// The frozen keys with one-line descriptions, for `--help` and the
/// `catalog` subcommand.
pub fn keys() -> Vec<(&'static str, &'static str)> {
    vec![
        ("arc-pair-k5", "arc-pair graph of K5 under S5; blocks by arc start (p = 3 case (a))"),
        ("arc-pair-k7", "arc-pair graph of K7 under S7; blocks by arc start (p = 5 case (a))"),
        ("gamma2-k5", "2-path graph of K5 over its 120-orbit of 3-arcs (p = 3 case (e))"),
        ("xi-k4", "3-arc graph of K4 over its distinct-vertex orbit; blocks by arc start"),
        ("chain-N", "matched cycle chain with N >= 3 blocks of six (p = 3 case (b)); e.g. chain-4"),
        ("c6-antipodal", "C6 under the dihedral group with antipodal blocks"),
        ("affine-N-M", "GF(2^N) affine orbit design, 1 <= M <= N-1 <= 7; e.g. affine-3-1"),
        ("fano", "the Fano plane with its full automorphism group"),
        ("k<N>", "complete graph K_N under S_N (orbit enumeration)"),
        ("c<N>", "cycle C_N under the dihedral group (orbit enumeration)"),
        ("petersen", "Petersen graph in Kneser labelling under induced S5"),
    ]
}

/// Builds the object for a catalog key.
pub fn build(key: &str) -> Result<CatalogObject, CatalogError> {
    match key {
        "arc-pair-k5" => Ok(CatalogObject::Triple(arc_pair_triple(
            &Graph::complete(5),
            &GeneratedGroup::symmetric(5),
        )?)),
        "arc-pair-k7" => Ok(CatalogObject::Triple(arc_pair_triple(
            &Graph::complete(7),
            &GeneratedGroup::symmetric(7),
        )?)),
        "gamma2-k5" => {
            let k5 = Graph::complete(5);
            let s5 = GeneratedGroup::symmetric(5);
            let delta = constructions::three_arc_orbits(&k5, &s5)?
                .into_iter()
                .find(|o| o.len() == 120)
                .expect("K5 has a 120-orbit of 3-arcs");
            Ok(CatalogObject::Triple(gamma2_triple(&k5, &s5, &delta)?))
        }
        "xi-k4" => {
            let k4 = Graph::complete(4);
            let s4 = GeneratedGroup::symmetric(4);
            let delta = constructions::three_arc_orbits(&k4, &s4)?
                .into_iter()
                .find(|o| {
                    let r = o.representative;
                    r[0] != r[3]
                })
                .expect("K4 has a distinct-vertex orbit of 3-arcs");
            Ok(CatalogObject::Triple(three_arc_graph_triple(&k4, &s4, &delta)?))
        }
        "c6-antipodal" => Ok(CatalogObject::Triple(SymmetricTriple::new(
            Graph::cycle(6)?,
            GeneratedGroup::dihedral(6),
            vec![vec![0, 3], vec![1, 4], vec![2, 5]],
        )?)),
        "fano" => {
            let design = IncidenceStructure::fano();
            let group = crate::designs::automorphism_group(&design)
                .expect("Fano is small enough for the search");
            Ok(CatalogObject::Design { design, group })
        }
        "petersen" => {
            let graph = Graph::petersen();
            let pairs = two_subsets(5);
            let tuples: Vec<Vec<usize>> = pairs.iter().map(|&(a, b)| vec![a, b]).collect();
            // Induce S5 on sorted pairs by hand: map, re-sort, look up.
            let s5 = GeneratedGroup::symmetric(5);
            let gens = s5
                .generators()
                .iter()
                .map(|g| {
                    let images: Vec<usize> = tuples
                        .iter()
                        .map(|t| {
                            let (x, y) = (g.apply(t[0]), g.apply(t[1]));
                            let key = (x.min(y), x.max(y));
                            pairs.iter().position(|&p| p == key).expect("closed")
                        })
                        .collect();
                    Permutation::from_images(images).expect("bijection")
                })
                .collect();
            let group = GeneratedGroup::new(10, gens)?;
            Ok(CatalogObject::Graph { graph, group })
        }
        _ => build_parameterized(key),
    }
}

fn build_parameterized(key: &str) -> Result<CatalogObject, CatalogError> {
    if let Some(rest) = key.strip_prefix("chain-") {
        let n: usize = rest.parse().map_err(|_| CatalogError::BadParameter {
            key: key.to_string(),
            reason: format!("`{rest}` is not a number"),
        })?;
        return Ok(CatalogObject::Triple(matched_cycle_chain(n)?));
    }
    if let Some(rest) = key.strip_prefix("affine-") {
        let parts: Vec<&str> = rest.split('-').collect();
        if parts.len() != 2 {
            return Err(CatalogError::BadParameter {
                key: key.to_string(),
                reason: "expected affine-N-M".to_string(),
            });
        }
        let n: u32 = parts[0].parse().map_err(|_| CatalogError::BadParameter {
            key: key.to_string(),
            reason: format!("`{}` is not a number", parts[0]),
        })?;
        let m: u32 = parts[1].parse().map_err(|_| CatalogError::BadParameter {
            key: key.to_string(),
            reason: format!("`{}` is not a number", parts[1]),
        })?;
        let (design, group) = affine_orbit_design(n, m)?;
        return Ok(CatalogObject::Design { design, group });
    }
    if let Some(rest) = key.strip_prefix('k') {
        if let Ok(n) = rest.parse::<usize>() {
            if n < 2 {
                return Err(CatalogError::BadParameter {
                    key: key.to_string(),
                    reason: "need at least two vertices".to_string(),
                });
            }
            return Ok(CatalogObject::Graph {
                graph: Graph::complete(n),
                group: GeneratedGroup::symmetric(n),
            });
        }
    }
    if let Some(rest) = key.strip_prefix('c') {
        if let Ok(n) = rest.parse::<usize>() {
            return Ok(CatalogObject::Graph {
                graph: Graph::cycle(n)?,
                group: GeneratedGroup::dihedral(n),
            });
        }
    }
    Err(CatalogError::UnknownKey(key.to_string()))
}

/// The canonical triples exercised by the identity and classification
/// suites, with the prime `p = v - k` where it is an odd prime.
pub fn suite_triples() -> Vec<(String, SymmetricTriple)> {
    ["arc-pair-k5", "arc-pair-k7", "gamma2-k5", "xi-k4", "chain-4", "c6-antipodal"]
        .iter()
        .map(|key| {
            let CatalogObject::Triple(t) = build(key).expect("catalog triple builds") else {
                panic!("{key} is a triple key");
            };
            (key.to_string(), t)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_BOUND;

    #[test]
    fn all_fixed_keys_build() {
        for (key, _) in keys() {
            if key.contains('<') || key.contains('N') {
                continue;
            }
            build(key).unwrap();
        }
        build("chain-4").unwrap();
        build("affine-3-1").unwrap();
        build("k4").unwrap();
        build("c6").unwrap();
    }

    #[test]
    fn unknown_and_malformed_keys_error() {
        assert!(matches!(build("nope"), Err(CatalogError::UnknownKey(_))));
        assert!(matches!(
            build("chain-x"),
            Err(CatalogError::BadParameter { .. })
        ));
        assert!(matches!(
            build("affine-3"),
            Err(CatalogError::BadParameter { .. })
        ));
        assert!(matches!(build("chain-1"), Err(CatalogError::Construct(_))));
    }

    #[test]
    fn suite_triples_are_valid() {
        for (key, triple) in suite_triples() {
            let report = triple.validate();
            assert!(report.is_valid(), "{key}: {:?}", report.failures());
        }
    }

    #[test]
    fn petersen_group_acts_arc_transitively() {
        let CatalogObject::Graph { graph, group } = build("petersen").unwrap() else {
            panic!("petersen is a graph key");
        };
        assert_eq!(group.order(DEFAULT_BOUND).unwrap(), 120);
        assert!(crate::graphs::is_s_arc_transitive(&graph, &group, 3).unwrap());
    }
}
