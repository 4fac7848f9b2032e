//! Finite-dimensional weight-graded commutative algebras by structure
//! constants.

use std::collections::BTreeMap;

use corelin::Rational;
use serde::{Deserialize, Serialize};

use crate::BarError;

/// A named basis element with cohomological degree and weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisElement {
    pub name: String,
    pub deg: u32,
    pub weight: u32,
}

/// A sparse combination of basis indices.
pub type Combination = Vec<(usize, Rational)>;

/// A connected, unital, graded-commutative algebra with a weight grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AlgebraRepr", into = "AlgebraRepr")]
pub struct WeightedAlgebra {
    basis: Vec<BasisElement>,
    unit: usize,
    /// `products[a][b] = a · b`.
    products: Vec<Vec<Combination>>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraRepr {
    basis: Vec<BasisElement>,
    unit: usize,
    /// Nonzero products `(a, b) → terms`.
    products: Vec<ProductRepr>,
}

#[derive(Serialize, Deserialize)]
struct ProductRepr {
    left: usize,
    right: usize,
    terms: Combination,
}

impl TryFrom<AlgebraRepr> for WeightedAlgebra {
    type Error = BarError;
    fn try_from(r: AlgebraRepr) -> Result<Self, Self::Error> {
        let table = r.products.into_iter().map(|p| ((p.left, p.right), p.terms)).collect();
        WeightedAlgebra::new(r.basis, r.unit, table)
    }
}

impl From<WeightedAlgebra> for AlgebraRepr {
    fn from(a: WeightedAlgebra) -> Self {
        let mut products = Vec::new();
        for (left, row) in a.products.iter().enumerate() {
            for (right, terms) in row.iter().enumerate() {
                if !terms.is_empty() && left != a.unit && right != a.unit {
                    products.push(ProductRepr {
                        left,
                        right,
                        terms: terms.clone(),
                    });
                }
            }
        }
        AlgebraRepr {
            basis: a.basis,
            unit: a.unit,
            products,
        }
    }
}

impl WeightedAlgebra {
    /// Builds the algebra from the products of non-unit basis elements
    /// (absent pairs multiply to zero; products with the unit are implied),
    /// and checks homogeneity, associativity and graded commutativity.
    pub fn new(
        basis: Vec<BasisElement>,
        unit: usize,
        table: BTreeMap<(usize, usize), Combination>,
    ) -> Result<Self, BarError> {
        let dim = basis.len();
        if dim == 0 {
            return Err(BarError::EmptyBasis);
        }
        if unit >= dim {
            return Err(BarError::IndexOutOfRange(unit));
        }
        if basis[unit].deg != 0 || basis[unit].weight != 0 {
            return Err(BarError::NotUnital(unit));
        }
        if let Some(i) = (0..dim).find(|&i| i != unit && basis[i].deg == 0) {
            return Err(BarError::NotConnected(i));
        }
        let mut products = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            products[unit][i] = vec![(i, Rational::one())];
            products[i][unit] = vec![(i, Rational::one())];
        }
        for ((a, b), terms) in table {
            for idx in [a, b] {
                if idx >= dim {
                    return Err(BarError::IndexOutOfRange(idx));
                }
            }
            if a == unit || b == unit {
                return Err(BarError::NotUnital(unit));
            }
            let terms: Combination = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            for (k, _) in &terms {
                let e = basis.get(*k).ok_or(BarError::IndexOutOfRange(*k))?;
                if e.deg != basis[a].deg + basis[b].deg || e.weight != basis[a].weight + basis[b].weight {
                    return Err(BarError::Inhomogeneous(a, b));
                }
            }
            products[a][b] = terms;
        }
        let alg = WeightedAlgebra { basis, unit, products };
        alg.check_laws()?;
        Ok(alg)
    }

    fn check_laws(&self) -> Result<(), BarError> {
        let dim = self.dim();
        for a in 0..dim {
            for b in 0..dim {
                let sign = if (self.basis[a].deg * self.basis[b].deg) % 2 == 1 { -1 } else { 1 };
                let ab = &self.products[a][b];
                let ba: Combination = self.products[b][a]
                    .iter()
                    .map(|(k, c)| (*k, c * &Rational::from_int(sign)))
                    .collect();
                if normalize(ab.clone()) != normalize(ba) {
                    return Err(BarError::NotCommutative(a, b));
                }
                for c in 0..dim {
                    let left = self.mul_comb(ab, &[(c, Rational::one())]);
                    let right = self.mul_comb(&[(a, Rational::one())], &self.products[b][c]);
                    if left != right {
                        return Err(BarError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    /// Indices of the augmentation ideal (every basis element but the unit).
    pub fn augmentation_ideal(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| i != self.unit).collect()
    }

    /// `a · b` for basis indices.
    pub fn mul(&self, a: usize, b: usize) -> &[(usize, Rational)] {
        &self.products[a][b]
    }

    /// Product of two combinations, normalized.
    pub fn mul_comb(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> Combination {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (a, ca) in x {
            for (b, cb) in y {
                for (k, c) in &self.products[*a][*b] {
                    *acc.entry(*k).or_insert_with(Rational::zero) += &(ca * cb) * c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

fn normalize(mut c: Combination) -> Combination {
    c.retain(|(_, v)| !v.is_zero());
    c.sort_by_key(|(k, _)| *k);
    c
}

/// `H*(ℙⁿ) = ℂ[x]/x^{n+1}` with `x` in degree 2 and weight 2.
pub fn cohomology_ring_pn(n: usize) -> Result<WeightedAlgebra, BarError> {
    cohomology_ring_pn_weighted(n, 2)
}

/// `ℂ[x]/x^{n+1}` with `x` in degree 2 and the given weight.
pub fn cohomology_ring_pn_weighted(n: usize, weight_x: u32) -> Result<WeightedAlgebra, BarError> {
    if n == 0 {
        return Err(BarError::InvalidParameter("ℙⁿ needs n ≥ 1".into()));
    }
    let basis = (0..=n as u32)
        .map(|k| BasisElement {
            name: match k {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            },
            deg: 2 * k,
            weight: weight_x * k,
        })
        .collect();
    let mut table = BTreeMap::new();
    for a in 1..=n {
        for b in 1..=n {
            if a + b <= n {
                table.insert((a, b), vec![(a + b, Rational::one())]);
            }
        }
    }
    WeightedAlgebra::new(basis, 0, table)
}
