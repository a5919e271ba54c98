use serde::{Deserialize, Serialize};

use super::translation::PartialTranslation;
use crate::coarse::UlfGraph;
use crate::error::{Error, Result};

/// Wire format for a single generator: `{"name": str, "map": [image or null]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub map: Vec<Option<usize>>,
}

/// Wire format: `{"n": int, "generators": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionJson {
    pub n: usize,
    pub generators: Vec<GeneratorJson>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGenerator {
    pub name: String,
    pub map: PartialTranslation,
}

/// Named generators acting on `0..n`. For group actions every generator is
/// a bijection; [`ActionGenerators::symmetrized`] closes the list under
/// inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionGenerators {
    n: usize,
    generators: Vec<NamedGenerator>,
    symmetric: bool,
}

impl ActionGenerators {
    pub fn new(n: usize, generators: Vec<NamedGenerator>) -> Result<Self> {
        for g in &generators {
            if g.map.ground_size() != n {
                return Err(Error::GroundSetMismatch {
                    left: n,
                    right: g.map.ground_size(),
                });
            }
        }
        let mut a = ActionGenerators {
            n,
            generators,
            symmetric: false,
        };
        a.symmetric = a.closed_under_inverses();
        Ok(a)
    }

    /// `ℤ/m` acting on itself by `±1`.
    pub fn cyclic(m: usize) -> Self {
        let gens = vec![
            NamedGenerator {
                name: "+1".into(),
                map: PartialTranslation::rotation(m, 1),
            },
            NamedGenerator {
                name: "-1".into(),
                map: PartialTranslation::rotation(m, m.saturating_sub(1)),
            },
        ];
        Self::new(m, gens).expect("rotations share the ground set")
    }

    pub fn from_json(j: &ActionJson) -> Result<Self> {
        let gens = j
            .generators
            .iter()
            .map(|g| {
                if g.map.len() != j.n {
                    return Err(Error::DimensionMismatch {
                        expected: j.n,
                        actual: g.map.len(),
                    });
                }
                Ok(NamedGenerator {
                    name: g.name.clone(),
                    map: PartialTranslation::new(g.map.clone())?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(j.n, gens)
    }

    pub fn to_json(&self) -> ActionJson {
        ActionJson {
            n: self.n,
            generators: self
                .generators
                .iter()
                .map(|g| GeneratorJson {
                    name: g.name.clone(),
                    map: g.map.as_slice().to_vec(),
                })
                .collect(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[NamedGenerator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    fn closed_under_inverses(&self) -> bool {
        self.generators.iter().all(|g| {
            let inv = g.map.inverse();
            self.generators.iter().any(|h| h.map == inv)
        })
    }

    /// Appends `s⁻¹` for every generator whose inverse is missing.
    pub fn symmetrized(&self) -> ActionGenerators {
        let mut gens = self.generators.clone();
        for g in &self.generators {
            let inv = g.map.inverse();
            if !gens.iter().any(|h| h.map == inv) {
                gens.push(NamedGenerator {
                    name: format!("{}^-1", g.name),
                    map: inv,
                });
            }
        }
        ActionGenerators {
            n: self.n,
            generators: gens,
            symmetric: true,
        }
    }

    /// Errors naming the first generator that is not a bijection of `0..n`.
    pub fn check_bijective(&self) -> Result<()> {
        match self.generators.iter().find(|g| !g.map.is_total()) {
            Some(g) => Err(Error::NotBijective {
                name: g.name.clone(),
            }),
            None => Ok(()),
        }
    }
}

/// Graph on `X` with edges `{(sx, x) : x ∈ X, s ∈ S}` for the symmetrized
/// generator list `S`.
pub fn schreier_graph(gens: &ActionGenerators) -> Result<UlfGraph> {
    gens.check_bijective()?;
    let sym = gens.symmetrized();
    let edges = sym
        .generators
        .iter()
        .flat_map(|g| (0..sym.n).map(move |x| (g.map.apply(x).expect("total generator"), x)));
    UlfGraph::new(sym.n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coarse::Dist;

    #[test]
    fn cyclic_action_gives_cycle() {
        let g = schreier_graph(&ActionGenerators::cyclic(5)).unwrap();
        assert_eq!(g, UlfGraph::cycle(5));
        assert!(g.max_degree() <= 3);
    }

    #[test]
    fn trivial_action_gives_loops_only() {
        let gens = ActionGenerators::new(
            3,
            vec![NamedGenerator {
                name: "id".into(),
                map: PartialTranslation::identity(3),
            }],
        )
        .unwrap();
        let g = schreier_graph(&gens).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(g.distance(0, 1), Dist::Inf);
        assert_eq!(g.distance(1, 1), Dist::ZERO);
    }

    #[test]
    fn two_transpositions_give_connected_path_with_loops() {
        let gens = ActionGenerators::new(
            3,
            vec![
                NamedGenerator {
                    name: "(0 1)".into(),
                    map: PartialTranslation::transposition(3, 0, 1),
                },
                NamedGenerator {
                    name: "(1 2)".into(),
                    map: PartialTranslation::transposition(3, 1, 2),
                },
            ],
        )
        .unwrap();
        assert!(gens.is_symmetric());
        let g = schreier_graph(&gens).unwrap();
        // enumerate (sx, x) by hand
        let expected = UlfGraph::new(3, [(0, 1), (2, 2), (1, 2), (0, 0)]).unwrap();
        assert_eq!(g, expected);
        assert!(g.is_connected());
    }

    #[test]
    fn non_bijective_generator_is_named() {
        let gens = ActionGenerators::new(
            2,
            vec![NamedGenerator {
                name: "half".into(),
                map: PartialTranslation::new(vec![Some(1), None]).unwrap(),
            }],
        )
        .unwrap();
        assert_eq!(
            schreier_graph(&gens),
            Err(Error::NotBijective {
                name: "half".into()
            })
        );
    }

    #[test]
    fn symmetrization_adds_missing_inverses() {
        let gens = ActionGenerators::new(
            4,
            vec![NamedGenerator {
                name: "r".into(),
                map: PartialTranslation::rotation(4, 1),
            }],
        )
        .unwrap();
        assert!(!gens.is_symmetric());
        let sym = gens.symmetrized();
        assert_eq!(sym.len(), 2);
        assert_eq!(sym.generators()[1].name, "r^-1");
        assert_eq!(schreier_graph(&gens).unwrap(), UlfGraph::cycle(4));
    }

    #[test]
    fn json_format() {
        let j: ActionJson =
            serde_json::from_str(r#"{"n":3,"generators":[{"name":"t","map":[1,0,null]}]}"#)
                .unwrap();
        let a = ActionGenerators::from_json(&j).unwrap();
        assert_eq!(a.to_json(), j);
        let short: ActionJson =
            serde_json::from_str(r#"{"n":3,"generators":[{"name":"t","map":[0]}]}"#).unwrap();
        assert!(ActionGenerators::from_json(&short).is_err());
    }
}
