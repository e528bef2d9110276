//! Instance files and machine-readable reports.
//!
//! The on-disk format is JSON with every rational carried as a decimal
//! string `"p/q"` (or `"p"`), so values round-trip bit-exactly. A
//! quaternion is the four-element array `["a","b","c","d"]`, a Gaussian
//! rational the pair `["re","im"]`, and a matrix an object
//! `{"rows", "cols", "entries"}` with row-major nested entries.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::adjoint::{CMatrix, QMatrix, RMatrix};
use crate::criteria::{ComparedInvariants, CriterionReport};
use crate::equation::{
    Certificate, EquationInstance, EquationKind, Solution, SolveOutcome, SolveStatus,
};
use crate::matrix::Mat;
use crate::scalar::{Automorphism, GaussianRational, Quaternion, Rational};

pub const SCHEMA_VERSION: u32 = 1;

/// Parse or validation failure, with the offending field in the message.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatError {
    pub message: String,
}

impl FormatError {
    fn new(message: impl Into<String>) -> Self {
        FormatError {
            message: message.into(),
        }
    }
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for FormatError {}

/// An equation instance plus an optional recorded solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub instance: EquationInstance,
    pub known_solution: Option<Solution>,
}

#[derive(Serialize, Deserialize)]
pub struct MatrixDto {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<[String; 4]>>,
}

#[derive(Serialize, Deserialize)]
struct InstanceDto {
    kind: String,
    epsilon: i64,
    #[serde(rename = "A")]
    a: MatrixDto,
    #[serde(rename = "B")]
    b: MatrixDto,
    #[serde(rename = "C")]
    c: MatrixDto,
}

#[derive(Serialize, Deserialize)]
struct InstanceFileDto {
    schema_version: u32,
    instance: InstanceDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    known_solution: Option<MatrixDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    known_solution_y: Option<MatrixDto>,
}

fn parse_rational(s: &str, ctx: &str) -> Result<Rational, FormatError> {
    Rational::from_str(s.trim())
        .map_err(|e| FormatError::new(format!("{ctx}: invalid rational {s:?} ({e})")))
}

fn quaternion_to_strings(q: &Quaternion) -> [String; 4] {
    [
        q.a.to_string(),
        q.b.to_string(),
        q.c.to_string(),
        q.d.to_string(),
    ]
}

fn quaternion_from_strings(parts: &[String; 4], ctx: &str) -> Result<Quaternion, FormatError> {
    Ok(Quaternion::new(
        parse_rational(&parts[0], ctx)?,
        parse_rational(&parts[1], ctx)?,
        parse_rational(&parts[2], ctx)?,
        parse_rational(&parts[3], ctx)?,
    ))
}

pub fn qmatrix_to_dto(m: &QMatrix) -> MatrixDto {
    MatrixDto {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|r| {
                (0..m.cols())
                    .map(|c| quaternion_to_strings(&m[(r, c)]))
                    .collect()
            })
            .collect(),
    }
}

pub fn qmatrix_from_dto(dto: &MatrixDto, field: &str) -> Result<QMatrix, FormatError> {
    if dto.entries.len() != dto.rows {
        return Err(FormatError::new(format!(
            "{field}: declared {} rows but found {}",
            dto.rows,
            dto.entries.len()
        )));
    }
    let mut data = Vec::with_capacity(dto.rows * dto.cols);
    for (r, row) in dto.entries.iter().enumerate() {
        if row.len() != dto.cols {
            return Err(FormatError::new(format!(
                "{field}: row {r} has {} entries, expected {}",
                row.len(),
                dto.cols
            )));
        }
        for (c, q) in row.iter().enumerate() {
            data.push(quaternion_from_strings(
                q,
                &format!("{field}.entries[{r}][{c}]"),
            )?);
        }
    }
    Ok(Mat::new(dto.rows, dto.cols, data))
}

fn instance_to_dto(inst: &EquationInstance) -> InstanceDto {
    InstanceDto {
        kind: inst.kind().as_str().to_owned(),
        epsilon: inst.aut().epsilon() as i64,
        a: qmatrix_to_dto(inst.a()),
        b: qmatrix_to_dto(inst.b()),
        c: qmatrix_to_dto(inst.c()),
    }
}

fn instance_from_dto(dto: &InstanceDto) -> Result<EquationInstance, FormatError> {
    let kind = EquationKind::parse(&dto.kind)
        .ok_or_else(|| FormatError::new(format!("instance.kind: unknown kind {:?}", dto.kind)))?;
    let aut = Automorphism::from_epsilon(dto.epsilon).ok_or_else(|| {
        FormatError::new(format!(
            "instance.epsilon: must be +1 or -1, found {}",
            dto.epsilon
        ))
    })?;
    let a = qmatrix_from_dto(&dto.a, "instance.A")?;
    let b = qmatrix_from_dto(&dto.b, "instance.B")?;
    let c = qmatrix_from_dto(&dto.c, "instance.C")?;
    EquationInstance::new(kind, a, b, c, aut)
        .map_err(|e| FormatError::new(format!("instance: {e}")))
}

impl InstanceFile {
    pub fn new(instance: EquationInstance, known_solution: Option<Solution>) -> Self {
        InstanceFile {
            instance,
            known_solution,
        }
    }

    pub fn to_json(&self) -> String {
        let (known_solution, known_solution_y) = match &self.known_solution {
            None => (None, None),
            Some(Solution::Single(x)) => (Some(qmatrix_to_dto(x)), None),
            Some(Solution::Pair { x, y }) => (Some(qmatrix_to_dto(x)), Some(qmatrix_to_dto(y))),
        };
        let dto = InstanceFileDto {
            schema_version: SCHEMA_VERSION,
            instance: instance_to_dto(&self.instance),
            known_solution,
            known_solution_y,
        };
        let mut out = serde_json::to_string_pretty(&dto).expect("instance serialization");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let dto: InstanceFileDto = serde_json::from_str(text)
            .map_err(|e| FormatError::new(format!("parse error: {e}")))?;
        if dto.schema_version != SCHEMA_VERSION {
            return Err(FormatError::new(format!(
                "schema_version: unsupported version {} (expected {})",
                dto.schema_version, SCHEMA_VERSION
            )));
        }
        let instance = instance_from_dto(&dto.instance)?;
        let shape = (instance.m(), instance.n());
        let x = dto
            .known_solution
            .as_ref()
            .map(|m| qmatrix_from_dto(m, "known_solution"))
            .transpose()?;
        let y = dto
            .known_solution_y
            .as_ref()
            .map(|m| qmatrix_from_dto(m, "known_solution_y"))
            .transpose()?;
        if let Some(m) = &x {
            if m.shape() != shape {
                return Err(FormatError::new(format!(
                    "known_solution: expected shape {}x{}, found {}x{}",
                    shape.0,
                    shape.1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if let Some(m) = &y {
            if m.shape() != shape {
                return Err(FormatError::new(format!(
                    "known_solution_y: expected shape {}x{}, found {}x{}",
                    shape.0,
                    shape.1,
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let two_sided = instance.kind() == EquationKind::TwoSided;
        let known_solution = match (x, y) {
            (None, None) => None,
            (Some(x), Some(y)) if two_sided => Some(Solution::Pair { x, y }),
            (Some(x), None) if !two_sided => Some(Solution::Single(x)),
            (Some(_), None) => {
                return Err(FormatError::new(
                    "known_solution_y: required for a two-sided known solution",
                ))
            }
            _ => {
                return Err(FormatError::new(
                    "known_solution_y: only valid for two-sided instances with known_solution",
                ))
            }
        };
        Ok(InstanceFile {
            instance,
            known_solution,
        })
    }

    pub fn load(path: &Path) -> Result<Self, FormatError> {
        let text = fs::read_to_string(path)
            .map_err(|e| FormatError::new(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn save(&self, path: &Path) -> Result<(), FormatError> {
        fs::write(path, self.to_json())
            .map_err(|e| FormatError::new(format!("{}: {e}", path.display())))
    }
}

#[derive(Serialize)]
pub struct CMatrixDto {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<[String; 2]>>,
}

fn gaussian_to_strings(z: &GaussianRational) -> [String; 2] {
    [z.re.to_string(), z.im.to_string()]
}

pub fn cmatrix_to_dto(m: &CMatrix) -> CMatrixDto {
    CMatrixDto {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|r| {
                (0..m.cols())
                    .map(|c| gaussian_to_strings(&m[(r, c)]))
                    .collect()
            })
            .collect(),
    }
}

#[derive(Serialize)]
pub struct RMatrixDto {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

pub fn rmatrix_to_dto(m: &RMatrix) -> RMatrixDto {
    RMatrixDto {
        rows: m.rows(),
        cols: m.cols(),
        entries: (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
            .collect(),
    }
}

#[derive(Serialize)]
#[serde(tag = "field", content = "entries")]
pub enum CertificateDto {
    #[serde(rename = "rational")]
    Rational(Vec<String>),
    #[serde(rename = "complex")]
    Complex(Vec<[String; 2]>),
}

#[derive(Serialize)]
pub struct SolveOutcomeDto {
    status: String,
    solution_space_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution: Option<MatrixDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution_y: Option<MatrixDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateDto>,
}

pub fn solve_outcome_to_dto(out: &SolveOutcome) -> SolveOutcomeDto {
    let (solution, solution_y) = match &out.solution {
        None => (None, None),
        Some(Solution::Single(x)) => (Some(qmatrix_to_dto(x)), None),
        Some(Solution::Pair { x, y }) => (Some(qmatrix_to_dto(x)), Some(qmatrix_to_dto(y))),
    };
    SolveOutcomeDto {
        status: match out.status {
            SolveStatus::Solvable => "solvable".to_owned(),
            SolveStatus::Unsolvable => "unsolvable".to_owned(),
        },
        solution_space_dim: out.solution_space_dim,
        solution,
        solution_y,
        certificate: out.certificate.as_ref().map(|c| match c {
            Certificate::Real(v) => {
                CertificateDto::Rational(v.iter().map(Rational::to_string).collect())
            }
            Certificate::Complex(v) => {
                CertificateDto::Complex(v.iter().map(gaussian_to_strings).collect())
            }
        }),
    }
}

#[derive(Serialize)]
#[serde(tag = "comparison")]
pub enum InvariantsDto {
    #[serde(rename = "smith-forms")]
    SmithForms {
        coupled: Vec<String>,
        split: Vec<String>,
    },
    #[serde(rename = "pencil-smith-forms")]
    PencilForms {
        coupled_lambda: Vec<String>,
        coupled_reversed: Vec<String>,
        split_lambda: Vec<String>,
        split_reversed: Vec<String>,
    },
    #[serde(rename = "ranks")]
    Ranks { coupled: usize, split: usize },
}

#[derive(Serialize)]
pub struct CriterionReportDto {
    verdict: bool,
    method: String,
    invariants: InvariantsDto,
}

pub fn criterion_report_to_dto(report: &CriterionReport) -> CriterionReportDto {
    CriterionReportDto {
        verdict: report.verdict,
        method: report.method.as_str().to_owned(),
        invariants: match &report.invariants {
            ComparedInvariants::SmithForms { coupled, split } => InvariantsDto::SmithForms {
                coupled: coupled.clone(),
                split: split.clone(),
            },
            ComparedInvariants::PencilForms {
                coupled_lambda,
                coupled_reversed,
                split_lambda,
                split_reversed,
            } => InvariantsDto::PencilForms {
                coupled_lambda: coupled_lambda.clone(),
                coupled_reversed: coupled_reversed.clone(),
                split_lambda: split_lambda.clone(),
                split_reversed: split_reversed.clone(),
            },
            ComparedInvariants::Ranks { coupled, split } => InvariantsDto::Ranks {
                coupled: *coupled,
                split: *split,
            },
        },
    }
}

/// Parses a standalone matrix file (the `adjoint`/`realrep` input format).
pub fn qmatrix_from_json(text: &str) -> Result<QMatrix, FormatError> {
    let dto: MatrixDto = serde_json::from_str(text)
        .map_err(|e| FormatError::new(format!("parse error: {e}")))?;
    qmatrix_from_dto(&dto, "matrix")
}

pub fn qmatrix_to_json(m: &QMatrix) -> String {
    let mut out = serde_json::to_string_pretty(&qmatrix_to_dto(m)).expect("matrix serialization");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn sample_instance() -> EquationInstance {
        let a = Mat::from_rows(vec![vec![Quaternion::new(
            rat(1, 2),
            rat(-3, 4),
            rat(0, 1),
            rat(22, 7),
        )]]);
        let b = Mat::from_rows(vec![vec![Quaternion::from_ints(0, 1, 0, 0)]]);
        let c = Mat::from_rows(vec![vec![Quaternion::from_ints(5, 0, -2, 1)]]);
        EquationInstance::new(
            EquationKind::SylvesterHat,
            a,
            b,
            c,
            Automorphism::NEGATE_JK,
        )
        .unwrap()
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let file = InstanceFile::new(
            sample_instance(),
            Some(Solution::Single(Mat::from_rows(vec![vec![
                Quaternion::new(rat(-1, 3), rat(0, 1), rat(7, 5), rat(0, 1)),
            ]]))),
        );
        let text = file.to_json();
        let back = InstanceFile::from_json(&text).unwrap();
        assert_eq!(back, file);
        // serialization is deterministic
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn rejects_bad_epsilon() {
        let text = InstanceFile::new(sample_instance(), None)
            .to_json()
            .replace("\"epsilon\": -1", "\"epsilon\": 2");
        let err = InstanceFile::from_json(&text).unwrap_err();
        assert!(err.message.contains("epsilon"), "{}", err.message);
    }

    #[test]
    fn rejects_unknown_kind() {
        let text = InstanceFile::new(sample_instance(), None)
            .to_json()
            .replace("sylvester-hat", "sylvester");
        let err = InstanceFile::from_json(&text).unwrap_err();
        assert!(err.message.contains("kind"), "{}", err.message);
    }

    #[test]
    fn rejects_wrong_shape_with_field_name() {
        let good = InstanceFile::new(sample_instance(), None).to_json();
        // C declared as 1x1 but given an extra row
        let bad = good.replace(
            "\"C\": {\n      \"rows\": 1,",
            "\"C\": {\n      \"rows\": 2,",
        );
        let err = InstanceFile::from_json(&bad).unwrap_err();
        assert!(err.message.contains('C'), "{}", err.message);
    }

    #[test]
    fn rejects_malformed_rational() {
        let text = InstanceFile::new(sample_instance(), None)
            .to_json()
            .replace("\"22/7\"", "\"22/seven\"");
        let err = InstanceFile::from_json(&text).unwrap_err();
        assert!(err.message.contains("invalid rational"), "{}", err.message);
    }

    #[test]
    fn known_solution_shape_is_validated() {
        let file = InstanceFile::new(sample_instance(), None);
        let text = file.to_json().replace(
            "\"instance\"",
            "\"known_solution\": {\"rows\":1,\"cols\":2,\"entries\":[[[\"0\",\"0\",\"0\",\"0\"],[\"0\",\"0\",\"0\",\"0\"]]]},\n  \"instance\"",
        );
        let err = InstanceFile::from_json(&text).unwrap_err();
        assert!(err.message.contains("known_solution"), "{}", err.message);
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = Mat::from_rows(vec![vec![Quaternion::from_ints(0, 0, 1, 0)]]);
        let text = qmatrix_to_json(&m);
        assert_eq!(qmatrix_from_json(&text).unwrap(), m);
    }
}
