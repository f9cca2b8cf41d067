//! Power graphs of `Z_n` and `D_n`, and the divisor-class decomposition of
//! the cyclic power graph as a generalized join of complete graphs.
//!
//! In `Z_n` (written additively) distinct `u`, `v` are adjacent iff one lies in
//! the cyclic subgroup generated by the other. Since `<v> = <gcd(v, n)>`, the
//! test is `gcd(v, n) | u`. Elements of the same additive order form a clique,
//! and two order classes `d`, `e` are joined iff `d | e` or `e | d`. The
//! identity and the generators are adjacent to everything.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::join::JoinSpec;
use crate::number_theory::{divides, euler_totient, proper_divisors};

/// Largest supported group parameter `n`. `P(Z_n)` for a prime power `n` is
/// complete, so this bounds memory at about `n^2` adjacency entries.
pub const MAX_GROUP_N: u64 = 2048;

pub(crate) fn check_group_n(n: u64) -> Result<usize> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "group parameter n",
            value: n,
            min: 3,
        });
    }
    if n > MAX_GROUP_N {
        return Err(Error::OrderTooLarge {
            order: n as usize,
            max: MAX_GROUP_N as usize,
        });
    }
    Ok(n as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupFamily {
    Cyclic,
    Dihedral,
}

/// `Z_n` or `D_n`, `n ≥ 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: GroupFamily,
    n: u64,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, n: u64) -> Result<Self> {
        check_group_n(n)?;
        Ok(GroupSpec { family, n })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(GroupFamily::Cyclic, n)
    }

    pub fn dihedral(n: u64) -> Result<Self> {
        Self::new(GroupFamily::Dihedral, n)
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn power_graph(&self) -> SimpleGraph {
        let built = match self.family {
            GroupFamily::Cyclic => power_graph_cyclic(self.n),
            GroupFamily::Dihedral => power_graph_dihedral(self.n),
        };
        built.expect("n validated at construction")
    }

    /// Element names in vertex order.
    pub fn labels(&self) -> Vec<String> {
        match self.family {
            GroupFamily::Cyclic => (0..self.n).map(|i| i.to_string()).collect(),
            GroupFamily::Dihedral => dihedral_labels(self.n),
        }
    }

    /// Closed-form Szeged index of the power graph.
    pub fn szeged_formula(&self) -> Result<u64> {
        match self.family {
            GroupFamily::Cyclic => crate::formulas::szeged_cyclic_formula(self.n),
            GroupFamily::Dihedral => crate::formulas::szeged_dihedral_formula(self.n),
        }
    }
}

/// `u ∈ <v>` in `Z_n`.
pub fn in_cyclic_subgroup(u: u64, v: u64, n: u64) -> bool {
    u.is_multiple_of(v.gcd(&n))
}

/// Additive order of `x` in `Z_n`.
pub fn additive_order(x: u64, n: u64) -> u64 {
    n / x.gcd(&n)
}

/// `P(Z_n)` on vertices `0..n`.
pub fn power_graph_cyclic(n: u64) -> Result<SimpleGraph> {
    let size = check_group_n(n)?;
    let g: Vec<u64> = (0..n).map(|v| v.gcd(&n)).collect();
    let edges = (0..size).flat_map(|u| {
        let g = &g;
        (u + 1..size).filter_map(move |v| {
            let (a, b) = (u as u64, v as u64);
            (a % g[v] == 0 || b % g[u] == 0).then_some((u, v))
        })
    });
    SimpleGraph::from_edge_list(size, edges)
}

/// `P(Z_n)` by explicit multiple scanning: `u ~ v` iff `k·u ≡ v` or `k·v ≡ u`
/// (mod n) for some `1 ≤ k ≤ n`. Quadratic per pair; a cross-check for
/// [`power_graph_cyclic`].
pub fn power_graph_cyclic_scan(n: u64) -> Result<SimpleGraph> {
    let size = check_group_n(n)?;
    let generates = |a: u64, b: u64| (1..=n).any(|k| (k * a) % n == b);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if generates(u, v) || generates(v, u) {
                edges.push((u as usize, v as usize));
            }
        }
    }
    SimpleGraph::from_edge_list(size, edges)
}

/// `P(Z_n)` with the identity removed; vertex `i` is element `i + 1`.
pub fn power_graph_cyclic_punctured(n: u64) -> Result<SimpleGraph> {
    let full = power_graph_cyclic(n)?;
    let keep: Vec<usize> = (1..full.order()).collect();
    Ok(full.induced_subgraph(&keep)?.0)
}

/// `P(D_n)`: rotations `r^i` are vertices `0..n` and carry `P(Z_n)`;
/// reflections `s·r^i` are vertices `n + i`, each adjacent only to the
/// identity.
pub fn power_graph_dihedral(n: u64) -> Result<SimpleGraph> {
    let size = check_group_n(n)?;
    let rotations = power_graph_cyclic(n)?;
    let pendants = (size..2 * size).map(|r| (0, r));
    SimpleGraph::from_edge_list(2 * size, rotations.edges().iter().copied().chain(pendants))
}

/// Vertex names for `P(D_n)`: rotations by exponent, then `s`, `sr`, `sr^2`, ...
pub fn dihedral_labels(n: u64) -> Vec<String> {
    let rotations = (0..n).map(|i| i.to_string());
    let reflections = (0..n).map(|i| match i {
        0 => "s".to_string(),
        1 => "sr".to_string(),
        _ => format!("sr^{i}"),
    });
    rotations.chain(reflections).collect()
}

/// Order-class structure of `P(Z_n)`.
///
/// Quotient vertex 0 is the class `S` of the identity and the generators
/// (`ell = φ(n) + 1` elements); vertex `i ≥ 1` is the class of elements of
/// order `divisors[i - 1]`, which has `class_sizes[i - 1] = φ(d)` elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CyclicDecomposition {
    pub n: u64,
    pub ell: u64,
    pub divisors: Vec<u64>,
    pub class_sizes: Vec<u64>,
    pub quotient: SimpleGraph,
}

pub fn cyclic_decomposition(n: u64) -> Result<CyclicDecomposition> {
    check_group_n(n)?;
    let divisors = proper_divisors(n)?.divisors;
    let class_sizes = divisors
        .iter()
        .map(|&d| euler_totient(d))
        .collect::<Result<Vec<_>>>()?;
    let count = divisors.len();
    let mut edges: Vec<(usize, usize)> = (1..=count).map(|i| (0, i)).collect();
    for i in 0..count {
        for j in i + 1..count {
            if divides(divisors[i], divisors[j]) {
                edges.push((i + 1, j + 1));
            }
        }
    }
    Ok(CyclicDecomposition {
        n,
        ell: euler_totient(n)? + 1,
        quotient: SimpleGraph::from_edge_list(count + 1, edges)?,
        divisors,
        class_sizes,
    })
}

impl CyclicDecomposition {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decomposition serialization is infallible")
    }

    /// Quotient adjacency between divisor classes `i` and `j` (0-based into
    /// `divisors`).
    pub fn divisor_adjacent(&self, i: usize, j: usize) -> bool {
        self.quotient.has_edge(i + 1, j + 1)
    }

    /// Join of `K_ell, K_φ(d_1), ..., K_φ(d_D)` over the quotient.
    pub fn join_spec(&self) -> JoinSpec {
        let components = std::iter::once(self.ell)
            .chain(self.class_sizes.iter().copied())
            .map(|k| SimpleGraph::complete(k as usize).expect("class sizes are positive"))
            .collect();
        JoinSpec::new(self.quotient.clone(), components).expect("complete components")
    }

    /// Group elements of each class, in block order: the identity then the
    /// generators, then the elements of each proper order, ascending.
    pub fn class_members(&self) -> Vec<Vec<u64>> {
        let mut classes = vec![Vec::new(); self.divisors.len() + 1];
        for x in 0..self.n {
            let order = additive_order(x, self.n);
            let block = if order == 1 || order == self.n {
                0
            } else {
                1 + self
                    .divisors
                    .binary_search(&order)
                    .expect("element orders divide n")
            };
            classes[block].push(x);
        }
        classes
    }

    /// Maps each vertex of the built join to the group element it stands for.
    pub fn canonical_relabeling(&self) -> Vec<usize> {
        self.class_members()
            .into_iter()
            .flatten()
            .map(|x| x as usize)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::join::build_generalized_join;
    use crate::number_theory::factorize;

    const Z6_EDGES: [(usize, usize); 13] = [
        (0, 1),
        (0, 5),
        (0, 2),
        (0, 4),
        (0, 3),
        (1, 5),
        (1, 2),
        (1, 4),
        (1, 3),
        (2, 4),
        (2, 5),
        (3, 5),
        (4, 5),
    ];

    #[test]
    fn cyclic_six_edge_list() {
        let g = power_graph_cyclic(6).unwrap();
        let expected = SimpleGraph::from_edge_list(6, Z6_EDGES).unwrap();
        assert_eq!(g, expected);
        assert_eq!(g.size(), 13);
    }

    #[test]
    fn cyclic_prime_orders_are_complete() {
        for p in [3u64, 5, 7, 11, 13] {
            assert_eq!(
                power_graph_cyclic(p).unwrap(),
                SimpleGraph::complete(p as usize).unwrap()
            );
        }
        assert_eq!(
            power_graph_cyclic(4).unwrap(),
            SimpleGraph::complete(4).unwrap()
        );
    }

    #[test]
    fn scope_errors() {
        for n in [0, 1, 2] {
            assert!(power_graph_cyclic(n).is_err());
            assert!(power_graph_cyclic_punctured(n).is_err());
            assert!(power_graph_dihedral(n).is_err());
            assert!(cyclic_decomposition(n).is_err());
            assert!(GroupSpec::cyclic(n).is_err());
        }
        assert!(power_graph_dihedral(MAX_GROUP_N + 1).is_err());
        assert!(power_graph_cyclic(MAX_GROUP_N + 1).is_err());
        assert!(GroupSpec::dihedral(MAX_GROUP_N).is_ok());
    }

    #[test]
    fn gcd_rule_matches_scan() {
        for n in 3..=60 {
            assert_eq!(
                power_graph_cyclic(n).unwrap(),
                power_graph_cyclic_scan(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn subgroup_membership() {
        assert!(in_cyclic_subgroup(0, 0, 6));
        assert!(!in_cyclic_subgroup(1, 0, 6));
        assert!(in_cyclic_subgroup(4, 2, 6));
        assert!(!in_cyclic_subgroup(3, 2, 6));
        assert_eq!(additive_order(0, 6), 1);
        assert_eq!(additive_order(4, 6), 3);
    }

    #[test]
    fn punctured_examples() {
        let g = power_graph_cyclic_punctured(6).unwrap();
        assert_eq!((g.order(), g.size()), (5, 8));
        assert_eq!(
            power_graph_cyclic_punctured(7).unwrap(),
            SimpleGraph::complete(6).unwrap()
        );
        assert_eq!(
            power_graph_cyclic_punctured(4).unwrap(),
            SimpleGraph::complete(3).unwrap()
        );
        // Element 1 (vertex 0) stays universal.
        for n in 3..=40 {
            let g = power_graph_cyclic_punctured(n).unwrap();
            assert_eq!(g.degree(0), g.order() - 1);
        }
    }

    #[test]
    fn dihedral_examples() {
        let g = power_graph_dihedral(6).unwrap();
        assert_eq!((g.order(), g.size()), (12, 19));
        let g = power_graph_dihedral(3).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        let g = power_graph_dihedral(4).unwrap();
        assert_eq!((g.order(), g.size()), (8, 10));
        for n in 3..=30u64 {
            let g = power_graph_dihedral(n).unwrap();
            let pendants: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) == 1).collect();
            assert_eq!(pendants, (n as usize..2 * n as usize).collect::<Vec<_>>());
            assert!(pendants.iter().all(|&v| g.neighbors(v) == [0]));
        }
    }

    #[test]
    fn dihedral_label_names() {
        assert_eq!(dihedral_labels(3), vec!["0", "1", "2", "s", "sr", "sr^2"]);
    }

    #[test]
    fn decomposition_examples() {
        let d = cyclic_decomposition(6).unwrap();
        assert_eq!(
            (d.ell, d.divisors.clone(), d.class_sizes.clone()),
            (3, vec![2, 3], vec![1, 2])
        );
        assert_eq!(
            d.quotient,
            SimpleGraph::from_edge_list(3, [(0, 1), (0, 2)]).unwrap()
        );

        let d = cyclic_decomposition(12).unwrap();
        assert_eq!(d.ell, 5);
        assert_eq!(d.divisors, vec![2, 3, 4, 6]);
        assert_eq!(d.class_sizes, vec![1, 2, 2, 2]);
        let divisor_edges: Vec<(u64, u64)> = d
            .quotient
            .edges()
            .iter()
            .filter(|&&(u, _)| u != 0)
            .map(|&(u, v)| (d.divisors[u - 1], d.divisors[v - 1]))
            .collect();
        assert_eq!(divisor_edges, vec![(2, 4), (2, 6), (3, 6)]);

        let d = cyclic_decomposition(9).unwrap();
        assert_eq!(
            (d.ell, d.divisors.clone(), d.class_sizes.clone()),
            (7, vec![3], vec![2])
        );
        assert_eq!(d.quotient, SimpleGraph::complete(2).unwrap());
    }

    #[test]
    fn decomposition_partitions_group() {
        for n in 3..=300 {
            let d = cyclic_decomposition(n).unwrap();
            assert_eq!(d.ell + d.class_sizes.iter().sum::<u64>(), n);
            assert_eq!(d.quotient.universal_vertex(), Some(0));
            let members = d.class_members();
            assert_eq!(members[0].len() as u64, d.ell);
            for (i, m) in members[1..].iter().enumerate() {
                assert_eq!(m.len() as u64, d.class_sizes[i]);
            }
        }
    }

    #[test]
    fn rebuilt_join_is_the_power_graph() {
        for n in 3..=80 {
            let d = cyclic_decomposition(n).unwrap();
            let joined = build_generalized_join(&d.join_spec()).unwrap();
            let relabeled = joined.graph.relabel(&d.canonical_relabeling()).unwrap();
            assert_eq!(relabeled, power_graph_cyclic(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn complete_iff_prime_power() {
        for n in 3..=128 {
            let complete = power_graph_cyclic(n).unwrap().is_complete();
            assert_eq!(complete, factorize(n).unwrap().is_prime_power(), "n = {n}");
        }
    }

    #[test]
    fn decomposition_json_shape() {
        let json = cyclic_decomposition(6).unwrap().to_json();
        assert_eq!(
            json,
            r#"{"n":6,"ell":3,"divisors":[2,3],"class_sizes":[1,2],"quotient":{"order":3,"edges":[[0,1],[0,2]]}}"#
        );
    }
}
