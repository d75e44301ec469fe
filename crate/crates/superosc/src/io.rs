//! JSON and CSV formats.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use superosc_core::additive::AdditiveSolution;
use superosc_core::analysis::{SampledSignal, SpectrumReport};
use superosc_core::quantum::{EigenReport, PotentialSpec};
use superosc_core::ProductSignalSpec;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{path}: {source}")]
    Csv { path: String, source: csv::Error },
    #[error("{path}: unsupported extension (expected .json or .csv)")]
    Extension { path: String },
}

/// Artifact format, chosen by file extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn of(path: &Path) -> Result<Self, IoError> {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("json") => Ok(Format::Json),
            Some("csv") => Ok(Format::Csv),
            _ => Err(IoError::Extension { path: path.display().to_string() }),
        }
    }
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

fn create(path: &Path) -> Result<BufWriter<File>, IoError> {
    File::create(path).map(BufWriter::new).map_err(|source| IoError::File { path: display(path), source })
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::File { path: display(path), source })?;
    serde_json::from_str(&text).map_err(|source| IoError::Json { path: display(path), source })
}

/// Pretty JSON with a trailing newline.
pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<(), IoError> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|source| IoError::Json { path: display(path), source })?;
    writeln!(w).and_then(|_| w.flush()).map_err(|source| IoError::File { path: display(path), source })
}

pub fn read_spec(path: &Path) -> Result<ProductSignalSpec, IoError> {
    read_json(path)
}

/// Writes the spec with its factors in canonical order.
pub fn write_spec(path: &Path, spec: &ProductSignalSpec) -> Result<(), IoError> {
    write_json(path, &spec.canonical())
}

pub fn read_potential(path: &Path) -> Result<PotentialSpec, IoError> {
    read_json(path)
}

/// CSV with a header row; every record has one field per column.
pub fn write_csv<I>(path: &Path, header: &[&str], rows: I) -> Result<(), IoError>
where
    I: IntoIterator<Item = Vec<f64>>,
{
    let err = |source| IoError::Csv { path: display(path), source };
    let mut w = csv::Writer::from_writer(create(path)?);
    w.write_record(header).map_err(err)?;
    for row in rows {
        w.serialize(row).map_err(err)?;
    }
    w.flush().map_err(|source| IoError::File { path: display(path), source })
}

/// `t,value`
pub fn write_samples_csv(path: &Path, s: &SampledSignal) -> Result<(), IoError> {
    write_csv(path, &["t", "value"], s.iter().map(|(t, v)| vec![t, v]))
}

/// `omega,magnitude`
pub fn write_spectrum_csv(path: &Path, r: &SpectrumReport) -> Result<(), IoError> {
    write_csv(path, &["omega", "magnitude"], r.frequencies.iter().zip(&r.magnitudes).map(|(w, m)| vec![*w, *m]))
}

/// `x,V`
pub fn write_potential_csv(path: &Path, p: &PotentialSpec) -> Result<(), IoError> {
    write_csv(path, &["x", "V"], p.x.iter().zip(&p.v).map(|(x, v)| vec![*x, *v]))
}

/// `x,psi_lifted,ground_vec`
pub fn write_eigen_csv(path: &Path, r: &EigenReport) -> Result<(), IoError> {
    let rows = (0..r.x.len()).map(|k| vec![r.x[k], r.psi_lifted[k], r.ground_vec[k]]);
    write_csv(path, &["x", "psi_lifted", "ground_vec"], rows)
}

/// The eigen summary document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenSummary {
    #[serde(rename = "E0")]
    pub e0: f64,
    pub node_count: usize,
    pub overlap: f64,
    pub n: usize,
    #[serde(rename = "C")]
    pub lift: f64,
}

impl From<&EigenReport> for EigenSummary {
    fn from(r: &EigenReport) -> Self {
        Self { e0: r.e0, node_count: r.node_count, overlap: r.overlap, n: r.n, lift: r.lift }
    }
}

/// The additive solution document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdditiveDocument {
    pub kernel: String,
    #[serde(rename = "omega_or_M")]
    pub omega_or_m: f64,
    pub coeffs: Vec<f64>,
    pub cond: f64,
    pub residual: f64,
    pub precision_bits: u32,
    pub centers: Vec<f64>,
    /// Dirichlet period; absent for sinc.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub period: Option<f64>,
}

impl From<&AdditiveSolution> for AdditiveDocument {
    fn from(s: &AdditiveSolution) -> Self {
        let period = match s.kernel {
            superosc_core::additive::Kernel::Dirichlet { period, .. } => Some(period),
            superosc_core::additive::Kernel::Sinc { .. } => None,
        };
        Self {
            kernel: s.kernel.name().into(),
            omega_or_m: s.kernel.omega_or_order(),
            coeffs: s.coeffs.clone(),
            cond: s.condition_number,
            residual: s.residual,
            precision_bits: s.precision_bits,
            centers: s.centers.clone(),
            period,
        }
    }
}
