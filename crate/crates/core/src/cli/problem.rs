//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! vars: x y
//! weights: 1 -1
//! images: x^2*y        # one line per variable, in order
//! images: -x*y^2
//! phi: x
//! phi: y + x^2
//! psi: x
//! psi: y - x^2
//! query: x*y + x       # repeatable
//! ```

use crate::derivation::{DiagonalDerivation, GeneralDerivation};
use crate::error::{Error, Result};
use crate::laurent::{parse, LaurentPoly, RingCtx};

#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub ctx: RingCtx,
    pub derivation: DiagonalDerivation,
    pub images: Option<GeneralDerivation>,
    pub phi: Option<Vec<LaurentPoly>>,
    pub psi: Option<Vec<LaurentPoly>>,
    pub queries: Vec<LaurentPoly>,
}

fn locate(line: usize, err: Error) -> Error {
    match err {
        Error::Syntax { column, message, .. } => Error::Problem {
            line,
            message: format!("syntax error at column {column}: {message}"),
        },
        Error::UnknownVariable { name, column, .. } => Error::Problem {
            line,
            message: format!("unknown variable {name} at column {column}"),
        },
        Error::Problem { .. } => err,
        other => Error::Problem { line, message: other.to_string() },
    }
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut vars: Option<(usize, Vec<String>)> = None;
        let mut weights: Option<(usize, Vec<i64>)> = None;
        let mut sections: [(&str, Vec<(usize, String)>); 4] = [
            ("images", Vec::new()),
            ("phi", Vec::new()),
            ("psi", Vec::new()),
            ("query", Vec::new()),
        ];

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once(':') else {
                return Err(Error::Problem {
                    line: line_no,
                    message: format!("expected 'key: value', found {line:?}"),
                });
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "vars" => {
                    if vars.is_some() {
                        return Err(Error::Problem { line: line_no, message: "duplicate vars".into() });
                    }
                    vars = Some((line_no, value.split_whitespace().map(String::from).collect()));
                }
                "weights" => {
                    if weights.is_some() {
                        return Err(Error::Problem {
                            line: line_no,
                            message: "duplicate weights".into(),
                        });
                    }
                    let ws = value
                        .split_whitespace()
                        .map(|w| {
                            w.parse::<i64>().map_err(|_| Error::Problem {
                                line: line_no,
                                message: format!("invalid weight {w:?}"),
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    weights = Some((line_no, ws));
                }
                _ => match sections.iter_mut().find(|(name, _)| *name == key) {
                    Some((_, entries)) => entries.push((line_no, value.to_string())),
                    None => {
                        return Err(Error::Problem {
                            line: line_no,
                            message: format!("unknown key {key:?}"),
                        })
                    }
                },
            }
        }

        let (vars_line, names) =
            vars.ok_or(Error::Problem { line: 0, message: "missing 'vars:' line".into() })?;
        let ctx = RingCtx::new(&names).map_err(|e| locate(vars_line, e))?;
        let (weights_line, ws) =
            weights.ok_or(Error::Problem { line: 0, message: "missing 'weights:' line".into() })?;
        if ws.len() != ctx.n() {
            return Err(Error::Problem {
                line: weights_line,
                message: format!("{} weights for {} variables", ws.len(), ctx.n()),
            });
        }
        let derivation = DiagonalDerivation::new(&ctx, ws)?;

        let parse_all = |entries: &[(usize, String)]| -> Result<Vec<LaurentPoly>> {
            entries.iter().map(|(l, s)| parse(s, &ctx).map_err(|e| locate(*l, e))).collect()
        };
        let per_variable = |name: &str, entries: &[(usize, String)]| -> Result<Option<Vec<LaurentPoly>>> {
            if entries.is_empty() {
                return Ok(None);
            }
            if entries.len() != ctx.n() {
                return Err(Error::Problem {
                    line: entries[entries.len() - 1].0,
                    message: format!(
                        "{} '{name}:' lines for {} variables",
                        entries.len(),
                        ctx.n()
                    ),
                });
            }
            parse_all(entries).map(Some)
        };

        let [(_, images), (_, phi), (_, psi), (_, queries)] = &sections;
        let images = match per_variable("images", images)? {
            Some(imgs) => Some(GeneralDerivation::new(&ctx, imgs)?),
            None => None,
        };
        let phi = per_variable("phi", phi)?;
        let psi = per_variable("psi", psi)?;
        let queries = parse_all(queries)?;
        Ok(ProblemFile { ctx, derivation, images, phi, psi, queries })
    }

    /// Parses an ad-hoc expression in the file's ring.
    pub fn expr(&self, text: &str) -> Result<LaurentPoly> {
        parse(text, &self.ctx)
    }
}
