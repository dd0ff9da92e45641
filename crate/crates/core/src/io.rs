//! JSON data formats for algebras and morphisms.
//!
//! Coefficients are always strings (`"4"`, `"-2/3"`) so that files stay
//! exact and independent of the field. Indices are 0-based.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraRef, LinearMap};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{FieldTag, Scalar};
use crate::variety::Variety;

/// A variety given by a built-in name or by inline laws.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VarietySpec {
    Name(String),
    Laws(Vec<String>),
}

impl VarietySpec {
    pub fn resolve(&self) -> Result<Variety> {
        match self {
            VarietySpec::Name(name) => {
                Variety::builtin(name).ok_or_else(|| Error::Format(format!("unknown variety {name:?}")))
            }
            VarietySpec::Laws(laws) => Variety::from_law_strings("custom", laws),
        }
    }

    pub fn of(v: &Variety) -> Self {
        match Variety::builtin(v.name()) {
            Some(b) if &b == v => VarietySpec::Name(v.name().to_string()),
            _ => VarietySpec::Laws(v.laws().iter().map(|l| l.to_string()).collect()),
        }
    }
}

/// Parses a variety argument: a built-in name, or laws separated by `;`.
pub fn parse_variety(arg: &str) -> Result<Variety> {
    if let Some(v) = Variety::builtin(arg.trim()) {
        return Ok(v);
    }
    if !arg.contains('[') {
        return Err(Error::Format(format!(
            "unknown variety `{}`: expected NAAlg, Vect, Lie, Leib or laws such as `[x1,x2] + [x2,x1]`",
            arg.trim()
        )));
    }
    Variety::from_law_strings("custom", arg.split(';').map(str::trim).filter(|s| !s.is_empty()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldTag,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `[i, j, k, c]` meaning the coefficient of `e_k` in `[e_i, e_j]` is `c`.
    pub products: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variety: Option<VarietySpec>,
}

impl AlgebraFile {
    pub fn from_algebra<S: Scalar>(a: &Algebra<S>, variety: Option<&Variety>) -> Self {
        AlgebraFile {
            field: S::field_tag(),
            dim: a.dim(),
            basis: a.labels().to_vec(),
            products: a
                .nonzero_products()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
            variety: variety.map(VarietySpec::of),
        }
    }

    pub fn to_algebra<S: Scalar>(&self) -> Result<Algebra<S>> {
        check_field::<S>(self.field)?;
        if self.basis.len() != self.dim {
            return Err(Error::Format(format!(
                "basis has {} labels but dim is {}",
                self.basis.len(),
                self.dim
            )));
        }
        let mut seen = HashSet::new();
        let mut entries = Vec::with_capacity(self.products.len());
        for (n, (i, j, k, c)) in self.products.iter().enumerate() {
            if [i, j, k].iter().any(|&&x| x >= self.dim) {
                return Err(Error::Format(format!(
                    "products[{n}]: index out of range for dim {}",
                    self.dim
                )));
            }
            if !seen.insert((*i, *j, *k)) {
                return Err(Error::Format(format!("products[{n}]: duplicate entry ({i}, {j}, {k})")));
            }
            let c = S::parse_coefficient(c).map_err(|e| Error::Format(format!("products[{n}]: {e}")))?;
            entries.push((*i, *j, *k, c));
        }
        Algebra::from_products(self.basis.clone(), entries)
    }

    pub fn variety(&self) -> Result<Option<Variety>> {
        self.variety.as_ref().map(VarietySpec::resolve).transpose()
    }
}

fn check_field<S: Scalar>(tag: FieldTag) -> Result<()> {
    if tag != S::field_tag() {
        return Err(Error::FieldMismatch(tag, S::field_tag()));
    }
    Ok(())
}

/// Row-per-domain-basis matrix of coefficient strings.
pub fn matrix_to_strings<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<String>> {
    m.row_iter().map(|r| r.iter().map(S::to_string).collect()).collect()
}

pub fn matrix_from_strings<S: Scalar>(rows: &[Vec<String>], shape: (usize, usize)) -> Result<Matrix<S>> {
    if rows.len() != shape.0 {
        return Err(Error::DimensionMismatch {
            expected: shape.0,
            found: rows.len(),
        });
    }
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != shape.1 {
            return Err(Error::Format(format!(
                "matrix row {i} has {} entries, expected {}",
                row.len(),
                shape.1
            )));
        }
        let row = row
            .iter()
            .map(|c| S::parse_coefficient(c).map_err(|e| Error::Format(format!("matrix row {i}: {e}"))))
            .collect::<Result<Vec<S>>>()?;
        parsed.push(row);
    }
    Matrix::from_rows(shape.1, parsed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismFile {
    /// Path of the domain's algebra file, relative to this file.
    pub domain: String,
    pub codomain: String,
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<VarietySpec>,
}

/// A morphism file with its algebras loaded and the map certified.
#[derive(Clone, Debug)]
pub struct LoadedMorphism<S: Scalar> {
    pub map: LinearMap<S>,
    pub domain_file: AlgebraFile,
    pub codomain_file: AlgebraFile,
    pub ambient: Option<Variety>,
}

impl<S: Scalar> LoadedMorphism<S> {
    /// The declared ambient variety, else the domain's, else `NAAlg`.
    pub fn ambient_or_default(&self) -> Result<Variety> {
        if let Some(v) = &self.ambient {
            return Ok(v.clone());
        }
        Ok(self.domain_file.variety()?.unwrap_or_else(Variety::naalg))
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        position: e.column(),
        message: format!("{}: line {}: {e}", path.display(), e.line()),
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}

/// Reads only the field tag of an algebra or morphism file.
pub fn peek_field(path: &Path) -> Result<FieldTag> {
    #[derive(Deserialize)]
    struct Field {
        field: FieldTag,
    }
    #[derive(Deserialize)]
    struct Morphism {
        domain: String,
    }
    let text = fs::read_to_string(path)?;
    if let Ok(f) = serde_json::from_str::<Field>(&text) {
        return Ok(f.field);
    }
    let m: Morphism = serde_json::from_str(&text).map_err(|e| Error::Parse {
        position: e.column(),
        message: format!("{}: line {}: {e}", path.display(), e.line()),
    })?;
    peek_field(&resolve(path, &m.domain))
}

fn resolve(base: &Path, reference: &str) -> PathBuf {
    base.parent().unwrap_or(Path::new(".")).join(reference)
}

pub fn load_algebra<S: Scalar>(path: &Path) -> Result<(AlgebraRef<S>, AlgebraFile)> {
    let file: AlgebraFile = read_json(path)?;
    let a = file.to_algebra()?.into_ref();
    Ok((a, file))
}

pub fn save_algebra<S: Scalar>(path: &Path, a: &Algebra<S>, variety: Option<&Variety>) -> Result<()> {
    write_json(path, &AlgebraFile::from_algebra(a, variety))
}

/// Loads a morphism file and certifies the map multiplicative.
pub fn load_morphism<S: Scalar>(path: &Path) -> Result<LoadedMorphism<S>> {
    let file: MorphismFile = read_json(path)?;
    let (domain, domain_file) = load_algebra::<S>(&resolve(path, &file.domain))?;
    let (codomain, codomain_file) = load_algebra::<S>(&resolve(path, &file.codomain))?;
    let matrix = matrix_from_strings(&file.matrix, (domain.dim(), codomain.dim()))?;
    let map = LinearMap::morphism(domain, codomain, matrix)?;
    let ambient = file.ambient.as_ref().map(VarietySpec::resolve).transpose()?;
    Ok(LoadedMorphism {
        map,
        domain_file,
        codomain_file,
        ambient,
    })
}

/// Writes a morphism together with its two algebra files, named
/// `<stem>.domain.json` and `<stem>.codomain.json` beside `path`.
pub fn save_morphism<S: Scalar>(path: &Path, map: &LinearMap<S>, ambient: Option<&Variety>) -> Result<()> {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .ok_or_else(|| Error::Format(format!("bad output path {}", path.display())))?;
    let domain_name = format!("{stem}.domain.json");
    let codomain_name = format!("{stem}.codomain.json");
    save_algebra(&resolve(path, &domain_name), map.domain(), ambient)?;
    save_algebra(&resolve(path, &codomain_name), map.codomain(), ambient)?;
    write_json(
        path,
        &MorphismFile {
            domain: domain_name,
            codomain: codomain_name,
            matrix: matrix_to_strings(map.matrix()),
            ambient: ambient.map(VarietySpec::of),
        },
    )
}

/// Bundled copies of the data files shipped in `data/`.
pub mod bundled {
    pub const COUNTEREXAMPLE_A: &str = include_str!("../data/counterexample_a.json");
    pub const COUNTEREXAMPLE_B: &str = include_str!("../data/counterexample_b.json");
    pub const COUNTEREXAMPLE_C: &str = include_str!("../data/counterexample_c.json");
    pub const COUNTEREXAMPLE_F: &str = include_str!("../data/counterexample_f.json");
    pub const COUNTEREXAMPLE_G: &str = include_str!("../data/counterexample_g.json");
    pub const SL2: &str = include_str!("../data/sl2.json");
    pub const SO3: &str = include_str!("../data/so3.json");
}

/// Parses a bundled algebra.
pub fn bundled_algebra<S: Scalar>(text: &str) -> Result<Algebra<S>> {
    let mut file: AlgebraFile = serde_json::from_str(text)?;
    // Bundled data is written over Q; integer entries are valid in every field.
    file.field = S::field_tag();
    file.to_algebra()
}

/// Parses a bundled morphism between two bundled algebras.
pub fn bundled_morphism<S: Scalar>(text: &str, domain: Algebra<S>, codomain: Algebra<S>) -> Result<LinearMap<S>> {
    let file: MorphismFile = serde_json::from_str(text)?;
    let m = matrix_from_strings(&file.matrix, (domain.dim(), codomain.dim()))?;
    LinearMap::morphism(domain.into_ref(), codomain.into_ref(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::scalar::{Fp, Rational};

    type Q = Rational;

    #[test]
    fn algebra_round_trip() {
        let a = samples::sl2_ltimes_v2::<Q>();
        let file = AlgebraFile::from_algebra(&a, Some(&Variety::lie()));
        let text = serde_json::to_string(&file).unwrap();
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        let b = back.to_algebra::<Q>().unwrap();
        assert_eq!(b, a);
        assert_eq!(back.variety().unwrap(), Some(Variety::lie()));
    }

    #[test]
    fn field_tag_format() {
        let a = samples::so3::<Fp<5>>();
        let text = serde_json::to_string(&AlgebraFile::from_algebra(&a, None)).unwrap();
        assert!(text.starts_with(r#"{"field":{"Fp":5},"dim":3"#), "{text}");
        let q = serde_json::to_string(&AlgebraFile::from_algebra(&samples::so3::<Q>(), None)).unwrap();
        assert!(q.starts_with(r#"{"field":"Q""#));
    }

    #[test]
    fn rejects_bad_files() {
        let base = AlgebraFile::from_algebra(&samples::example_a::<Q>(), None);
        let mut dup = base.clone();
        dup.products.push(dup.products[0].clone());
        assert!(matches!(dup.to_algebra::<Q>(), Err(Error::Format(_))));
        let mut range = base.clone();
        range.products.push((0, 0, 2, "1".into()));
        assert!(matches!(range.to_algebra::<Q>(), Err(Error::Format(_))));
        let mut coef = base.clone();
        coef.products[0].3 = "1/0".into();
        assert!(matches!(coef.to_algebra::<Q>(), Err(Error::Format(_))));
        assert!(matches!(base.to_algebra::<Fp<5>>(), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn inline_laws() {
        let spec: VarietySpec = serde_json::from_str(r#"["[x1,x2] + [x2,x1]"]"#).unwrap();
        let v = spec.resolve().unwrap();
        assert_eq!(v.laws().len(), 1);
        assert_eq!(VarietySpec::of(&Variety::leib()), VarietySpec::Name("Leib".into()));
        assert!(matches!(VarietySpec::of(&v), VarietySpec::Laws(_)));
        assert_eq!(parse_variety("lie").unwrap(), Variety::lie());
        assert_eq!(parse_variety("[x1,x2]; [x1,[x2,x3]]").unwrap().laws().len(), 2);
    }

    #[test]
    fn bundled_data_matches_samples() {
        let a = bundled_algebra::<Q>(bundled::COUNTEREXAMPLE_A).unwrap();
        let b = bundled_algebra::<Q>(bundled::COUNTEREXAMPLE_B).unwrap();
        let c = bundled_algebra::<Q>(bundled::COUNTEREXAMPLE_C).unwrap();
        assert_eq!(a, samples::example_a());
        assert_eq!(b, samples::example_b());
        assert_eq!(c, samples::example_c());
        assert!(bundled_algebra::<Q>(bundled::SL2)
            .unwrap()
            .same_structure(&samples::sl2()));
        assert!(bundled_algebra::<Q>(bundled::SO3)
            .unwrap()
            .same_structure(&samples::so3()));
        let f = bundled_morphism(bundled::COUNTEREXAMPLE_F, b.clone(), a).unwrap();
        assert_eq!(f.matrix(), samples::example_f::<Q>().matrix());
        let g = bundled_morphism(bundled::COUNTEREXAMPLE_G, c, b).unwrap();
        assert_eq!(g.matrix(), samples::example_g::<Q>().matrix());
    }
}
