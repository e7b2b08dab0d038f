//! On-disk JSON descriptions of algebras, homs, bimodules, triangular
//! constructions and ideals, plus the conversions to and from the domain
//! types. Sparse tensors are written as 0-based index quadruples
//! `[i, j, k, "p/q"]`; omitted entries are zero.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraHom, Bimodule, FiniteAlgebra, Ideal};
use crate::linalg::Mat;
use crate::rat::Rat;
use crate::triangular::{build_tri, TriangularAlgebra};
use crate::Error;

/// Any input file, discriminated by its `kind` field.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpecFile {
    Algebra(AlgebraSpec),
    Hom(HomSpec),
    Bimodule(BimoduleSpec),
    Tri(TriSpec),
    Ideal(IdealSpec),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Nonzero structure constants as `[i, j, k, value]`.
    pub structure: Vec<(usize, usize, usize, Rat)>,
    pub unit: Vec<Rat>,
}

/// An endomorphism of an inline-described algebra: the algebra fields plus
/// a row-major matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomSpec {
    #[serde(flatten)]
    pub algebra: AlgebraSpec,
    pub matrix: Vec<Rat>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BimoduleSpec {
    pub dim: usize,
    pub left_algebra: AlgebraSpec,
    pub right_algebra: AlgebraSpec,
    /// Nonzero left-action constants as `[i, p, q, value]`.
    pub left_action: Vec<(usize, usize, usize, Rat)>,
    /// Nonzero right-action constants as `[p, j, q, value]`.
    pub right_action: Vec<(usize, usize, usize, Rat)>,
}

/// A triangular construction by reference: paths to the component specs,
/// resolved relative to the file containing them.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TriSpec {
    pub a: String,
    pub m: String,
    pub b: String,
}

/// An ideal together with its ambient algebra, described inline so the
/// file can be checked on its own.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealSpec {
    pub algebra: AlgebraSpec,
    /// Spanning vectors in ambient coordinates.
    pub basis: Vec<Vec<Rat>>,
}

fn dense_from_quads(
    quads: &[(usize, usize, usize, Rat)],
    bounds: (usize, usize, usize),
    what: &str,
) -> Result<Vec<Rat>, Error> {
    let (n0, n1, n2) = bounds;
    let mut out = vec![Rat::zero(); n0 * n1 * n2];
    for &(i, j, k, ref v) in quads {
        if i >= n0 || j >= n1 || k >= n2 {
            return Err(Error::Parse(format!(
                "{what} index [{i}, {j}, {k}] out of range for bounds [{n0}, {n1}, {n2}]"
            )));
        }
        out[(i * n1 + j) * n2 + k] = v.clone();
    }
    Ok(out)
}

fn quads_from_dense(
    dense: impl Fn(usize, usize, usize) -> Rat,
    bounds: (usize, usize, usize),
) -> Vec<(usize, usize, usize, Rat)> {
    let (n0, n1, n2) = bounds;
    let mut out = Vec::new();
    for i in 0..n0 {
        for j in 0..n1 {
            for k in 0..n2 {
                let v = dense(i, j, k);
                if !v.is_zero() {
                    out.push((i, j, k, v));
                }
            }
        }
    }
    out
}

impl AlgebraSpec {
    pub fn to_algebra(&self) -> Result<FiniteAlgebra, Error> {
        let n = self.dim;
        let labels = match &self.labels {
            Some(l) => {
                if l.len() != n {
                    return Err(Error::Parse(format!(
                        "{} labels given for dimension {n}",
                        l.len()
                    )));
                }
                l.clone()
            }
            None => (0..n).map(|i| format!("e{i}")).collect(),
        };
        let structure = dense_from_quads(&self.structure, (n, n, n), "structure")?;
        if self.unit.len() != n {
            return Err(Error::Parse(format!(
                "unit vector has length {}, expected {n}",
                self.unit.len()
            )));
        }
        FiniteAlgebra::new(labels, structure, self.unit.clone())
    }

    pub fn from_algebra(a: &FiniteAlgebra) -> Self {
        let n = a.dim();
        AlgebraSpec {
            dim: n,
            labels: Some(a.labels().to_vec()),
            structure: quads_from_dense(|i, j, k| a.structure_const(i, j, k).clone(), (n, n, n)),
            unit: a.unit().to_vec(),
        }
    }
}

impl HomSpec {
    pub fn to_hom(&self) -> Result<AlgebraHom, Error> {
        let alg = self.algebra.to_algebra()?;
        let n = alg.dim();
        if self.matrix.len() != n * n {
            return Err(Error::Parse(format!(
                "hom matrix has {} entries, expected {}",
                self.matrix.len(),
                n * n
            )));
        }
        let m = Mat::new(n, n, self.matrix.clone())?;
        AlgebraHom::new(alg.clone(), alg, m)
    }

    pub fn from_hom(h: &AlgebraHom) -> Self {
        HomSpec {
            algebra: AlgebraSpec::from_algebra(&h.source),
            matrix: (0..h.matrix.rows())
                .flat_map(|r| (0..h.matrix.cols()).map(move |c| (r, c)))
                .map(|(r, c)| h.matrix.at(r, c).clone())
                .collect(),
        }
    }
}

impl BimoduleSpec {
    pub fn to_bimodule(&self) -> Result<Bimodule, Error> {
        let left = self.left_algebra.to_algebra()?;
        let right = self.right_algebra.to_algebra()?;
        let d = self.dim;
        let la = dense_from_quads(&self.left_action, (left.dim(), d, d), "left action")?;
        let ra = dense_from_quads(&self.right_action, (d, right.dim(), d), "right action")?;
        Bimodule::new(left, right, d, la, ra)
    }

    pub fn from_bimodule(x: &Bimodule) -> Self {
        let d = x.dim();
        BimoduleSpec {
            dim: d,
            left_algebra: AlgebraSpec::from_algebra(x.left_algebra()),
            right_algebra: AlgebraSpec::from_algebra(x.right_algebra()),
            left_action: quads_from_dense(
                |i, p, q| x.left_coeff(i, p, q).clone(),
                (x.left_algebra().dim(), d, d),
            ),
            right_action: quads_from_dense(
                |p, j, q| x.right_coeff(p, j, q).clone(),
                (d, x.right_algebra().dim(), d),
            ),
        }
    }
}

impl IdealSpec {
    pub fn to_parts(&self) -> Result<(FiniteAlgebra, Ideal), Error> {
        let ambient = self.algebra.to_algebra()?;
        for v in &self.basis {
            if v.len() != ambient.dim() {
                return Err(Error::Parse(format!(
                    "ideal basis vector has length {}, expected {}",
                    v.len(),
                    ambient.dim()
                )));
            }
        }
        Ok((ambient, Ideal::new(self.basis.clone())))
    }
}

/// Parses one spec file; serde errors carry the offending line and column.
pub fn load_spec(path: &Path) -> Result<SpecFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Resolves a tri spec's component paths relative to its own location and
/// builds the triangular algebra.
pub fn load_tri(path: &Path, spec: &TriSpec) -> Result<TriangularAlgebra, Error> {
    let dir = path.parent().map(PathBuf::from).unwrap_or_default();
    let load_alg = |rel: &str| -> Result<FiniteAlgebra, Error> {
        match load_spec(&dir.join(rel))? {
            SpecFile::Algebra(a) => a.to_algebra(),
            _ => Err(Error::Parse(format!("{rel}: expected kind \"algebra\""))),
        }
    };
    let a = load_alg(&spec.a)?;
    let b = load_alg(&spec.b)?;
    let m = match load_spec(&dir.join(&spec.m))? {
        SpecFile::Bimodule(m) => m.to_bimodule()?,
        _ => {
            return Err(Error::Parse(format!(
                "{}: expected kind \"bimodule\"",
                spec.m
            )))
        }
    };
    build_tri(&a, &m, &b)
}

/// Deterministic pretty rendering used for both reports and emitted specs.
pub fn render(spec: &SpecFile) -> String {
    serde_json::to_string_pretty(spec).expect("spec serialization cannot fail")
}
