//! Line-oriented curve files.
//!
//! ```text
//! # Starling's sketch
//! continuity: 0
//! segment
//! dimension: 2
//! degree: 2
//! weights: 1 2 1
//! points:
//! 0 0
//! 1 1
//! 2 0
//! ```
//!
//! `#` starts a comment, blank lines are ignored, and the `segment` line may
//! be omitted before the first segment. A segment without `weights:` is a
//! polynomial curve (all weights 1).

use std::fmt::Write as _;

use ratbez::{BezierCurve, RationalBezierCurve};

use crate::error::CliError;

/// One segment as read from disk, before curve validation.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentData {
    pub dimension: usize,
    pub points: Vec<Vec<f64>>,
    pub weights: Option<Vec<f64>>,
}

impl SegmentData {
    pub fn degree(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    pub fn to_rational(&self) -> Result<RationalBezierCurve<f64>, CliError> {
        let weights = self.weights.clone().unwrap_or_else(|| vec![1.0; self.points.len()]);
        Ok(RationalBezierCurve::from_points(&self.points, &weights)?)
    }

    pub fn from_polynomial(curve: &BezierCurve<f64>) -> Self {
        SegmentData { dimension: curve.dim(), points: curve.points().map(<[f64]>::to_vec).collect(), weights: None }
    }

    pub fn from_rational(curve: &RationalBezierCurve<f64>) -> Self {
        SegmentData {
            dimension: curve.dim(),
            points: curve.points().map(<[f64]>::to_vec).collect(),
            weights: Some(curve.weights().to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CurveDocument {
    pub continuity: usize,
    pub segments: Vec<SegmentData>,
}

#[derive(Default)]
struct Pending {
    dimension: Option<usize>,
    degree: Option<usize>,
    weights: Option<Vec<f64>>,
    points: Vec<Vec<f64>>,
    reading_points: bool,
    start_line: usize,
    /// Opened by an explicit `segment` line.
    marked: bool,
}

impl Pending {
    fn is_blank(&self) -> bool {
        self.dimension.is_none() && self.degree.is_none() && self.weights.is_none() && self.points.is_empty()
    }

    fn finish(self) -> Result<SegmentData, CliError> {
        let line = self.start_line;
        let dimension = self.dimension.ok_or_else(|| CliError::parse(line, "segment has no `dimension:`"))?;
        let degree = self.degree.ok_or_else(|| CliError::parse(line, "segment has no `degree:`"))?;
        if dimension == 0 {
            return Err(CliError::parse(line, "dimension must be at least 1"));
        }
        if self.points.len() != degree + 1 {
            return Err(CliError::parse(
                line,
                format!("degree {degree} needs {} point rows, found {}", degree + 1, self.points.len()),
            ));
        }
        if let Some(w) = &self.weights {
            if w.len() != degree + 1 {
                return Err(CliError::parse(line, format!("degree {degree} needs {} weights, found {}", degree + 1, w.len())));
            }
            if let Some(i) = w.iter().position(|&v| !(v > 0.0) || !v.is_finite()) {
                return Err(CliError::parse(line, format!("weight {i} is not a positive finite number")));
            }
        }
        Ok(SegmentData { dimension, points: self.points, weights: self.weights })
    }
}

fn numbers(text: &str, line: usize) -> Result<Vec<f64>, CliError> {
    text.split_whitespace()
        .map(|tok| {
            let v: f64 = tok.parse().map_err(|_| CliError::parse(line, format!("`{tok}` is not a number")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(CliError::parse(line, format!("`{tok}` is not finite")))
            }
        })
        .collect()
}

fn count(text: &str, key: &str, line: usize) -> Result<usize, CliError> {
    text.trim().parse().map_err(|_| CliError::parse(line, format!("`{key}` expects a non-negative integer")))
}

impl CurveDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut doc = CurveDocument::default();
        let mut cur = Pending { start_line: 1, ..Pending::default() };
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if content == "segment" {
                if !cur.is_blank() {
                    doc.segments.push(std::mem::take(&mut cur).finish()?);
                }
                cur.start_line = line;
                cur.marked = true;
                continue;
            }
            if let Some((key, value)) = content.split_once(':') {
                cur.reading_points = false;
                if cur.is_blank() && !cur.marked {
                    cur.start_line = line;
                }
                match key.trim() {
                    "continuity" => {
                        if !doc.segments.is_empty() || !cur.is_blank() || cur.marked {
                            return Err(CliError::parse(line, "`continuity:` must precede the first segment"));
                        }
                        doc.continuity = count(value, "continuity", line)?;
                    }
                    "dimension" => cur.dimension = Some(count(value, "dimension", line)?),
                    "degree" => cur.degree = Some(count(value, "degree", line)?),
                    "weights" => cur.weights = Some(numbers(value, line)?),
                    "points" => {
                        if !value.trim().is_empty() {
                            return Err(CliError::parse(line, "`points:` is followed by one row per line"));
                        }
                        if cur.dimension.is_none() || cur.degree.is_none() {
                            return Err(CliError::parse(line, "`dimension:` and `degree:` must come before `points:`"));
                        }
                        cur.reading_points = true;
                    }
                    other => return Err(CliError::parse(line, format!("unknown key `{other}`"))),
                }
                continue;
            }
            if !cur.reading_points {
                return Err(CliError::parse(line, format!("unexpected line `{content}`")));
            }
            let row = numbers(content, line)?;
            let dim = cur.dimension.expect("checked at `points:`");
            if row.len() != dim {
                return Err(CliError::parse(line, format!("expected {dim} coordinates, found {}", row.len())));
            }
            cur.points.push(row);
        }
        if !cur.is_blank() {
            doc.segments.push(cur.finish()?);
        }
        if doc.segments.is_empty() {
            return Err(CliError::parse(1, "document contains no segment"));
        }
        Ok(doc)
    }

    /// Serialises with 17 significant digits, which reads back bit-exactly.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if self.continuity > 0 {
            let _ = writeln!(out, "continuity: {}", self.continuity);
        }
        for seg in &self.segments {
            let _ = writeln!(out, "segment");
            let _ = writeln!(out, "dimension: {}", seg.dimension);
            let _ = writeln!(out, "degree: {}", seg.degree());
            if let Some(w) = &seg.weights {
                let _ = writeln!(out, "weights: {}", join(w));
            }
            let _ = writeln!(out, "points:");
            for p in &seg.points {
                let _ = writeln!(out, "{}", join(p));
            }
        }
        out
    }
}

fn join(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v:.16e}")).collect::<Vec<_>>().join(" ")
}
