use std::collections::VecDeque;

use super::{Graph, GraphError};

/// A finite abelian group `Z_{n_1} x ... x Z_{n_d}` with a generating set.
/// Generators are stored reduced modulo the moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    moduli: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl GroupSpec {
    /// Validates that every generator is nonzero, that the set is closed
    /// under negation and that it generates the whole group.
    pub fn new(moduli: Vec<usize>, generators: Vec<Vec<i64>>) -> Result<Self, GraphError> {
        if moduli.is_empty() || moduli.iter().any(|&m| m < 2) {
            return Err(GraphError::InvalidParameter(format!(
                "group moduli must all be >= 2, got {moduli:?}"
            )));
        }
        let mut reduced: Vec<Vec<usize>> = Vec::with_capacity(generators.len());
        for g in &generators {
            if g.len() != moduli.len() {
                return Err(GraphError::InvalidParameter(format!(
                    "generator {g:?} has the wrong arity for moduli {moduli:?}"
                )));
            }
            let r: Vec<usize> = g
                .iter()
                .zip(&moduli)
                .map(|(&x, &m)| x.rem_euclid(m as i64) as usize)
                .collect();
            if r.iter().all(|&x| x == 0) {
                return Err(GraphError::InvalidParameter(format!(
                    "generator {g:?} is the identity"
                )));
            }
            if !reduced.contains(&r) {
                reduced.push(r);
            }
        }
        let spec = GroupSpec {
            moduli,
            generators: reduced,
        };
        for g in &spec.generators {
            if !spec.generators.contains(&spec.negate(g)) {
                return Err(GraphError::InvalidParameter(format!(
                    "generating set is not closed under inverses: missing -{g:?}"
                )));
            }
        }
        if !spec.generates() {
            return Err(GraphError::InvalidParameter(
                "generators do not generate the group".into(),
            ));
        }
        Ok(spec)
    }

    /// `{±e_j}`: the canonical generating set.
    pub fn canonical(moduli: &[usize]) -> Result<Self, GraphError> {
        let d = moduli.len();
        let mut gens = Vec::with_capacity(2 * d);
        for j in 0..d {
            for sign in [1, -1] {
                let mut e = vec![0i64; d];
                e[j] = sign;
                gens.push(e);
            }
        }
        GroupSpec::new(moduli.to_vec(), gens)
    }

    /// `Z_n` with generators `{±1, ..., ±k}`.
    pub fn cyclic_interval(n: usize, k: usize) -> Result<Self, GraphError> {
        let gens = (1..=k as i64).flat_map(|s| [vec![s], vec![-s]]).collect();
        GroupSpec::new(vec![n], gens)
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().product()
    }

    fn negate(&self, g: &[usize]) -> Vec<usize> {
        g.iter()
            .zip(&self.moduli)
            .map(|(&x, &m)| (m - x) % m)
            .collect()
    }

    fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    }

    /// Mixed-radix index, last coordinate fastest.
    pub fn index_of(&self, element: &[usize]) -> usize {
        element
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&x, &m)| acc * m + x)
    }

    pub fn element(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = index % m;
            index /= m;
        }
        out
    }

    fn generates(&self) -> bool {
        let order = self.order();
        let mut seen = vec![false; order];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            let g = self.element(i);
            for s in &self.generators {
                let j = self.index_of(&self.add(&g, s));
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        count == order
    }
}

/// Cayley graph of an abelian group: `g ~ h` iff `g - h` is a generator.
pub fn cayley_abelian(spec: &GroupSpec) -> Graph {
    let mut g = Graph::empty(spec.order());
    for i in 0..spec.order() {
        let a = spec.element(i);
        for s in &spec.generators {
            let j = spec.index_of(&spec.add(&a, s));
            g.add_edge_if_absent(i, j);
        }
    }
    let label: Vec<String> = spec.moduli.iter().map(|m| format!("Z{m}")).collect();
    g.with_name(format!("Cay({})", label.join("x")))
}
