//! Run configuration: a flat `key = value` file with `#` comments.
//!
//! ```text
//! base_disc = 1          # 1 for F = Q, else the discriminant of real quadratic F
//! delta = -7             # or "a, b" for a + b·ω
//! h = 1                  # optional; required when [F:Q] = 2
//! ck = 1                 # optional; required when [F:Q] = 2
//! alphas = 3; -2; 1,1; 5/3
//! alpha_bound = 50       # instead of alphas
//! y = 0.5; 1; 5          # per place with commas, e.g. "1, 2"
//! tolerance = 1e-9
//! ```

use std::path::Path;

use crate::error::{Error, Result};
use crate::field::ElementF;
use crate::tower::{FieldConfig, FieldTower};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub enum AlphaSpec {
    /// `(a, b, den)` for `(a + b·ω)/den`.
    List(Vec<(i128, i128, i128)>),
    Bound(u32),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub field: FieldConfig,
    pub alphas: AlphaSpec,
    /// One entry per grid point; scalars are broadcast later.
    pub y: Vec<Vec<f64>>,
    pub tolerance: f64,
}

const KEYS: [&str; 8] = ["base_disc", "delta", "h", "ck", "alphas", "alpha_bound", "y", "tolerance"];

impl RunConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::ConfigValue(format!("cannot read {}: {e}", path.display())))?;
        text.parse()
    }

    /// Expand the α specification into field elements, in input order.
    pub fn alpha_grid(&self, tower: &FieldTower) -> Result<Vec<ElementF>> {
        let field = tower.field();
        let out: Vec<ElementF> = match &self.alphas {
            AlphaSpec::List(list) => list
                .iter()
                .map(|&(a, b, d)| {
                    ElementF::new(field, a, b, d).map_err(|e| Error::ConfigValue(format!("alpha {a},{b}/{d}: {e}")))
                })
                .collect::<Result<_>>()?,
            AlphaSpec::Bound(n) => {
                let n = *n as i128;
                if field.degree() == 1 {
                    (1..=n).flat_map(|a| [a, -a]).map(|a| ElementF::from_int(field, a)).collect::<Result<_>>()?
                } else {
                    let mut v = Vec::new();
                    for b in -n..=n {
                        for a in -n..=n {
                            if (a, b) != (0, 0) {
                                v.push(ElementF::new(field, a, b, 1)?);
                            }
                        }
                    }
                    v
                }
            }
        };
        if out.is_empty() {
            return Err(Error::ConfigValue("alphas is empty after expansion".into()));
        }
        Ok(out)
    }

    /// `y` vectors broadcast to the number of real places.
    pub fn y_grid(&self, places: usize) -> Result<Vec<Vec<f64>>> {
        self.y
            .iter()
            .map(|entry| match entry.len() {
                1 => Ok(vec![entry[0]; places]),
                n if n == places => Ok(entry.clone()),
                n => Err(Error::ConfigValue(format!("y entry has {n} components, F has {places} real places"))),
            })
            .collect()
    }
}

impl std::str::FromStr for RunConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut base_disc = None;
        let mut delta = None;
        let (mut h, mut ck) = (None, None);
        let (mut alphas, mut bound) = (None, None);
        let mut y = None;
        let mut tolerance = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| Error::Config { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(err(format!("expected `key = value`, got `{line}`")));
            };
            let (key, value) = (key.trim(), value.trim());
            if value.is_empty() {
                return Err(err(format!("empty value for `{key}`")));
            }
            match key {
                "base_disc" => base_disc = Some(int(value).map_err(err)? as i64),
                "delta" => {
                    let parts = split_ints(value, ',').map_err(err)?;
                    delta = Some(match parts[..] {
                        [a] => [a as i64, 0],
                        [a, b] => [a as i64, b as i64],
                        _ => return Err(err("delta takes one or two integers".into())),
                    });
                }
                "h" => h = Some(positive(value).map_err(err)?),
                "ck" => ck = Some(positive(value).map_err(err)?),
                "alphas" => {
                    let list = value.split(';').map(|s| alpha_entry(s.trim())).collect::<std::result::Result<_, _>>();
                    alphas = Some(list.map_err(err)?);
                }
                "alpha_bound" => bound = Some(positive(value).map_err(err)? as u32),
                "y" => {
                    let entries = value
                        .split(';')
                        .map(|e| e.split(',').map(|x| float(x.trim())).collect::<std::result::Result<Vec<_>, _>>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(err)?;
                    if entries.iter().flatten().any(|v| !(*v > 0.0 && v.is_finite())) {
                        return Err(err("y values must be positive".into()));
                    }
                    y = Some(entries);
                }
                "tolerance" => {
                    let t = float(value).map_err(err)?;
                    if !(t > 0.0 && t.is_finite()) {
                        return Err(err("tolerance must be positive".into()));
                    }
                    tolerance = Some(t);
                }
                other => {
                    return Err(err(format!("unknown key `{other}` (known: {})", KEYS.join(", "))));
                }
            }
        }
        let missing = |k: &str| Error::ConfigValue(format!("missing key `{k}`"));
        let alphas = match (alphas, bound) {
            (Some(list), None) => AlphaSpec::List(list),
            (None, Some(n)) => AlphaSpec::Bound(n),
            (None, None) => return Err(missing("alphas")),
            (Some(_), Some(_)) => return Err(Error::ConfigValue("give either alphas or alpha_bound, not both".into())),
        };
        Ok(RunConfig {
            field: FieldConfig {
                base_disc: base_disc.unwrap_or(1),
                delta: delta.ok_or_else(|| missing("delta"))?,
                h,
                ck,
            },
            alphas,
            y: y.unwrap_or_else(|| vec![vec![1.0]]),
            tolerance: tolerance.unwrap_or(DEFAULT_TOLERANCE),
        })
    }
}

fn int(s: &str) -> std::result::Result<i128, String> {
    s.parse().map_err(|_| format!("`{s}` is not an integer"))
}

fn positive(s: &str) -> std::result::Result<u64, String> {
    s.parse().ok().filter(|&v| v > 0).ok_or_else(|| format!("`{s}` is not a positive integer"))
}

fn float(s: &str) -> std::result::Result<f64, String> {
    s.parse().map_err(|_| format!("`{s}` is not a number"))
}

fn split_ints(s: &str, sep: char) -> std::result::Result<Vec<i128>, String> {
    s.split(sep).map(|p| int(p.trim())).collect()
}

/// `a`, `a,b`, `a/den` or `a,b/den`.
fn alpha_entry(s: &str) -> std::result::Result<(i128, i128, i128), String> {
    let (coords, den) = match s.split_once('/') {
        Some((c, d)) => (c, int(d.trim())?),
        None => (s, 1),
    };
    if den == 0 {
        return Err(format!("alpha `{s}` has zero denominator"));
    }
    let parts = split_ints(coords, ',')?;
    let (a, b) = match parts[..] {
        [a] => (a, 0),
        [a, b] => (a, b),
        _ => return Err(format!("alpha `{s}` must have one or two coordinates")),
    };
    if (a, b) == (0, 0) {
        return Err("alpha = 0 is not allowed".into());
    }
    Ok((a, b, den))
}
