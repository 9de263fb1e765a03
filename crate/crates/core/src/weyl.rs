//! The spherical Weyl group as an explicit table of matrices.

use std::collections::{HashMap, VecDeque};

use num_rational::Rational64;

use crate::vector::{LatticePoint, Vector, MAX_RANK};

/// Square integer matrix acting on simple-root coordinates.
///
/// Weyl group matrices are integral in this basis, so the exact rational
/// action never needs a denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i32>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn from_rows(rows: &[Vec<i32>]) -> Self {
        let n = rows.len();
        let data = rows
            .iter()
            .flat_map(|r| r.iter().copied())
            .collect::<Vec<_>>();
        assert_eq!(data.len(), n * n, "matrix must be square");
        IntMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.data[i * self.n + j]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let n = self.n;
        Vector::new(
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| v[j] * Rational64::from_integer(self.get(i, j) as i64))
                        .sum()
                })
                .collect(),
        )
    }

    pub fn apply_lattice(&self, p: &LatticePoint) -> LatticePoint {
        let mut out = [0; MAX_RANK];
        for (i, o) in out.iter_mut().enumerate().take(self.n) {
            *o = (0..self.n).map(|j| self.get(i, j) * p[j]).sum();
        }
        out
    }
}

/// An element of the spherical Weyl group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Reduced word in simple reflections (0-based simple-root indices).
    pub word: Vec<u8>,
    pub matrix: IntMatrix,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.matrix.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

/// Enumerated Weyl group with a right-multiplication table.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    index: HashMap<IntMatrix, usize>,
    right_mul: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl WeylGroup {
    /// Breadth-first closure of the identity under right multiplication by
    /// the generators. BFS order makes every recorded word reduced.
    pub fn generate(generators: &[IntMatrix]) -> Self {
        let n = generators[0].dim();
        let id = IntMatrix::identity(n);
        let mut elements = vec![WeylElement {
            word: vec![],
            matrix: id.clone(),
        }];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for (i, s) in generators.iter().enumerate() {
                let m = elements[w].matrix.mul(s);
                if !index.contains_key(&m) {
                    let mut word = elements[w].word.clone();
                    word.push(i as u8);
                    index.insert(m.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(WeylElement { word, matrix: m });
                }
            }
        }
        let right_mul: Vec<Vec<usize>> = elements
            .iter()
            .map(|e| generators.iter().map(|s| index[&e.matrix.mul(s)]).collect())
            .collect();
        // w^{-1} is the product of w's word read backwards.
        let inverse = elements
            .iter()
            .map(|e| {
                e.word
                    .iter()
                    .rev()
                    .fold(0usize, |acc, &i| right_mul[acc][i as usize])
            })
            .collect();
        WeylGroup {
            elements,
            index,
            right_mul,
            inverse,
        }
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, idx: usize) -> &WeylElement {
        &self.elements[idx]
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index of `w·s_i`.
    pub fn mul_generator(&self, w: usize, i: usize) -> usize {
        self.right_mul[w][i]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w]
    }
}
