//! Sparse polynomials in the slot-coordinate variables x^(s)_j.
//!
//! Multilinear forms only ever use each slot once per monomial; the rewriting
//! rules for slice decompositions (and composition with an arbitrary linear
//! map of the matrix space) do not preserve that structure, so they operate on
//! this general representation instead. A monomial is a sorted multiset of
//! (slot, coordinate) variables; repeated variables are allowed.

use crate::field::FieldSpec;
use crate::linalg::Matrix;
use crate::multilinear::MultilinearForm;
use crate::{Error, Result};
use std::collections::BTreeMap;

pub type Monomial = Vec<(u32, u32)>;

/// A polynomial on the d x n grid of slot-coordinate variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPoly {
    spec: FieldSpec,
    d: usize,
    n: usize,
    terms: BTreeMap<Monomial, i64>,
}

pub fn format_monomial(m: &Monomial) -> String {
    if m.is_empty() {
        return "1".to_string();
    }
    m.iter()
        .map(|&(s, j)| format!("x({},{})", s + 1, j + 1))
        .collect::<Vec<_>>()
        .join("*")
}

impl MatrixPoly {
    pub fn zero(spec: FieldSpec, d: usize, n: usize) -> MatrixPoly {
        MatrixPoly {
            spec,
            d,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// Lifts a multilinear form into the grid; `global_slots[j]` names the
    /// grid slot carrying the form's local slot `j`.
    pub fn lift(form: &MultilinearForm, global_slots: &[usize], d: usize) -> Result<MatrixPoly> {
        let shape = form.shape();
        if global_slots.len() != shape.d {
            return Err(Error::ShapeMismatch(format!(
                "{} slot labels for a {}-linear form",
                global_slots.len(),
                shape.d
            )));
        }
        if let Some(&s) = global_slots.iter().find(|&&s| s >= d) {
            return Err(Error::ShapeMismatch(format!(
                "slot label {} outside grid with {} slots",
                s + 1,
                d
            )));
        }
        let mut terms = BTreeMap::new();
        for (key, c) in form.coeffs() {
            let mut mono: Monomial = key
                .iter()
                .enumerate()
                .map(|(j, &coord)| (global_slots[j] as u32, coord))
                .collect();
            mono.sort_unstable();
            terms.insert(mono, c);
        }
        Ok(MatrixPoly {
            spec: shape.spec,
            d,
            n: shape.n,
            terms,
        })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn grid(&self) -> (usize, usize) {
        (self.d, self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Degree of the highest monomial (zero polynomial reports 0).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self, deg: usize) -> bool {
        self.terms.keys().all(|m| m.len() == deg)
    }

    fn grids_match(&self, other: &MatrixPoly) -> Result<()> {
        if self.spec != other.spec || self.d != other.d || self.n != other.n {
            return Err(Error::ShapeMismatch(format!(
                "grid {}x{} over {} vs {}x{} over {}",
                self.d, self.n, self.spec, other.d, other.n, other.spec
            )));
        }
        Ok(())
    }

    fn insert(&mut self, mono: Monomial, c: i64) -> Result<()> {
        let cur = self.terms.get(&mono).copied().unwrap_or(0);
        let next = self.spec.add(cur, c)?;
        if next == 0 {
            self.terms.remove(&mono);
        } else {
            self.terms.insert(mono, next);
        }
        Ok(())
    }

    pub fn add(&self, other: &MatrixPoly) -> Result<MatrixPoly> {
        self.grids_match(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MatrixPoly) -> Result<MatrixPoly> {
        self.grids_match(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.insert(m.clone(), self.spec.neg(c)?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Result<MatrixPoly> {
        let c = self.spec.canon(c);
        let mut out = MatrixPoly::zero(self.spec, self.d, self.n);
        for (m, v) in self.terms() {
            out.insert(m.clone(), self.spec.mul(v, c)?)?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MatrixPoly) -> Result<MatrixPoly> {
        self.grids_match(other)?;
        let mut out = MatrixPoly::zero(self.spec, self.d, self.n);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                let mut mono = ma.clone();
                mono.extend_from_slice(mb);
                mono.sort_unstable();
                out.insert(mono, self.spec.mul(ca, cb)?)?;
            }
        }
        Ok(out)
    }

    /// A degree-1 polynomial as its coefficient vector over the flattened
    /// grid (variable (s, j) at index s*n + j).
    pub fn linear_coeffs(&self) -> Result<Vec<i64>> {
        if !self.is_homogeneous(1) {
            return Err(Error::ShapeMismatch(
                "polynomial is not a linear form".into(),
            ));
        }
        let mut v = vec![0i64; self.d * self.n];
        for (m, c) in self.terms() {
            let (s, j) = m[0];
            v[s as usize * self.n + j as usize] = c;
        }
        Ok(v)
    }

    pub fn from_linear_coeffs(
        spec: FieldSpec,
        d: usize,
        n: usize,
        coeffs: &[i64],
    ) -> Result<MatrixPoly> {
        if coeffs.len() != d * n {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a {}x{} grid",
                coeffs.len(),
                d,
                n
            )));
        }
        let mut out = MatrixPoly::zero(spec, d, n);
        for (idx, &c) in coeffs.iter().enumerate() {
            let c = spec.canon(c);
            if c != 0 {
                out.insert(vec![((idx / n) as u32, (idx % n) as u32)], c)?;
            }
        }
        Ok(out)
    }

    /// Composition with a linear map of the grid: substitutes each variable
    /// by the corresponding row combination of `map` (a (d*n) x (d*n) matrix
    /// over the same domain, variable (s, j) flattened to index s*n + j).
    pub fn compose(&self, map: &Matrix) -> Result<MatrixPoly> {
        let dim = self.d * self.n;
        if map.rows() != dim || map.cols() != dim {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{}, grid needs {}x{}",
                map.rows(),
                map.cols(),
                dim,
                dim
            )));
        }
        if map.spec() != self.spec {
            return Err(Error::SpecMismatch(
                self.spec.to_string(),
                map.spec().to_string(),
            ));
        }
        // Sparse substitution rows, built once.
        let rows: Vec<Vec<(Monomial, i64)>> = (0..dim)
            .map(|v| {
                (0..dim)
                    .filter(|&w| map.get(v, w) != 0)
                    .map(|w| {
                        (
                            vec![((w / self.n) as u32, (w % self.n) as u32)],
                            map.get(v, w),
                        )
                    })
                    .collect()
            })
            .collect();
        let mut out = MatrixPoly::zero(self.spec, self.d, self.n);
        for (mono, c) in self.terms() {
            let mut partial: Vec<(Monomial, i64)> = vec![(Vec::new(), c)];
            for &(s, j) in mono {
                let row = &rows[s as usize * self.n + j as usize];
                let mut next = Vec::with_capacity(partial.len() * row.len());
                for (pm, pc) in &partial {
                    for (rm, rc) in row {
                        let mut m = pm.clone();
                        m.extend_from_slice(rm);
                        next.push((m, self.spec.mul(*pc, *rc)?));
                    }
                }
                partial = next;
            }
            for (mut m, v) in partial {
                m.sort_unstable();
                out.insert(m, v)?;
            }
        }
        Ok(out)
    }

    /// Lowers back to a multilinear form when every monomial uses each slot of
    /// one common slot set exactly once. Returns the (sorted) slot set and the
    /// form on those slots. Fails on the zero polynomial (no slot set can be
    /// inferred) and on any monomial breaking the structure.
    pub fn try_to_form(&self) -> Result<(Vec<usize>, MultilinearForm)> {
        let Some(first) = self.terms.keys().next() else {
            return Err(Error::NotRowMultilinear(
                "zero polynomial has no slot support".into(),
            ));
        };
        let slots: Vec<usize> = first.iter().map(|&(s, _)| s as usize).collect();
        let distinct = slots.windows(2).all(|w| w[0] < w[1]);
        if !distinct {
            return Err(Error::NotRowMultilinear(format_monomial(first)));
        }
        let shape = crate::multilinear::Shape::new(slots.len(), self.n, self.spec)?;
        let mut coeffs = Vec::new();
        for (m, c) in self.terms() {
            let m_slots: Vec<usize> = m.iter().map(|&(s, _)| s as usize).collect();
            if m_slots != slots {
                return Err(Error::NotRowMultilinear(format_monomial(m)));
            }
            let key: Vec<u32> = m.iter().map(|&(_, j)| j).collect();
            coeffs.push((key, c));
        }
        Ok((slots, MultilinearForm::from_coeffs(shape, coeffs)?))
    }
}
