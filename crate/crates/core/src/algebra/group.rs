//! Finite matrix groups by breadth-first closure.

use std::collections::HashSet;

use super::matrix::ExactMatrix;
use crate::error::Error;

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A finite group of invertible matrices, elements sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGroup {
    generators: Vec<ExactMatrix>,
    elements: Vec<ExactMatrix>,
}

impl MatrixGroup {
    pub fn generators(&self) -> &[ExactMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[ExactMatrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dimension(&self) -> usize {
        self.elements[0].rows()
    }

    pub fn contains(&self, g: &ExactMatrix) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn identity(&self) -> ExactMatrix {
        ExactMatrix::identity(self.dimension())
    }

    /// Smallest k ≥ 1 with gᵏ = 1.
    pub fn element_order(&self, g: &ExactMatrix) -> usize {
        let id = self.identity();
        let mut power = g.clone();
        let mut k = 1;
        while power != id {
            power = &power * g;
            k += 1;
            assert!(k <= self.order(), "element not of finite order within the group");
        }
        k
    }
}

pub fn group_closure(generators: &[ExactMatrix]) -> Result<MatrixGroup, Error> {
    group_closure_with_cap(generators, DEFAULT_ELEMENT_CAP)
}

/// Closes `generators` under multiplication. The identity is always
/// included; for a finite group this also yields all inverses.
pub fn group_closure_with_cap(
    generators: &[ExactMatrix],
    cap: usize,
) -> Result<MatrixGroup, Error> {
    let Some(first) = generators.first() else {
        return Err(Error::Dimension("no generators".into()));
    };
    let n = first.rows();
    for g in generators {
        if !g.is_square() || g.rows() != n {
            return Err(Error::Dimension(format!(
                "generator of shape {}x{} in a group of {n}x{n} matrices",
                g.rows(),
                g.cols()
            )));
        }
        if g.determinant()?.is_zero() {
            return Err(Error::Singular);
        }
    }
    let mut unique: Vec<ExactMatrix> = generators.to_vec();
    unique.sort();
    unique.dedup();

    let identity = ExactMatrix::identity(n);
    let mut seen: HashSet<ExactMatrix> = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for element in &frontier {
            for g in &unique {
                let product = element * g;
                if !seen.contains(&product) {
                    if seen.len() >= cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    seen.insert(product.clone());
                    next.push(product);
                }
            }
        }
        frontier = next;
    }
    let mut elements: Vec<ExactMatrix> = seen.into_iter().collect();
    elements.sort();
    Ok(MatrixGroup {
        generators: generators.to_vec(),
        elements,
    })
}
