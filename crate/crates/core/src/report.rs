//! Report serialization: JSON summaries and CSV tables with every float
//! printed as C `%.15e`, so identical runs give identical bytes.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::tower::FieldTower;

pub const SCHEMA_VERSION: u32 = 1;

/// `x` formatted like C's `printf("%.15e", x)`.
pub fn fmt_e(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{x:.15e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

fn raw(x: f64) -> Option<Box<RawValue>> {
    x.is_finite().then(|| RawValue::from_string(fmt_e(x)).expect("valid JSON number"))
}

pub fn sci<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    raw(*x).serialize(s)
}

pub fn sci_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&raw(*x))?;
    }
    seq.end()
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerSummary {
    pub base_disc: i64,
    pub delta: [i128; 2],
    pub degree_n: u32,
    pub r: u32,
    pub w: u32,
    pub h: u64,
    pub ck: u64,
    pub class_data: crate::tower::ClassSource,
    pub rel_disc_norm: u64,
    pub finite_ramified: Vec<String>,
    pub normal_closure_degree: u32,
}

impl TowerSummary {
    pub fn of(tower: &FieldTower) -> Self {
        let cd = tower.class_data();
        TowerSummary {
            base_disc: tower.field().disc(),
            delta: tower.delta().numerator(),
            degree_n: tower.degree(),
            r: tower.r(),
            w: tower.w(),
            h: cd.h,
            ck: cd.ck,
            class_data: cd.source,
            rel_disc_norm: tower.rel_disc_norm(),
            finite_ramified: tower.finite_ramified().iter().map(|p| p.to_string()).collect(),
            normal_closure_degree: tower.normal_closure_degree(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityRecord {
    pub alpha: String,
    #[serde(serialize_with = "sci_vec")]
    pub y: Vec<f64>,
    pub case_tag: &'static str,
    #[serde(serialize_with = "sci")]
    pub degree_total: f64,
    #[serde(serialize_with = "sci")]
    pub b_phi_sum_route: f64,
    #[serde(serialize_with = "sci")]
    pub b_phi_closed_route: f64,
    #[serde(serialize_with = "sci")]
    pub rhs: f64,
    #[serde(serialize_with = "sci")]
    pub abs_err: f64,
    #[serde(serialize_with = "sci")]
    pub rel_err: f64,
    /// Relative disagreement between the two `b_Φ` routes.
    #[serde(serialize_with = "sci")]
    pub route_rel_err: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub n_checked: usize,
    pub n_pass: usize,
    #[serde(serialize_with = "sci")]
    pub max_rel_err: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub schema: u32,
    pub command: &'static str,
    pub tower: TowerSummary,
    #[serde(serialize_with = "sci")]
    pub tolerance: f64,
    pub records: Vec<IdentityRecord>,
    pub summary: Summary,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.summary.n_pass == self.summary.n_checked
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = Csv::new(&[
            "alpha",
            "y",
            "case_tag",
            "degree_total",
            "b_phi_sum_route",
            "b_phi_closed_route",
            "rhs",
            "abs_err",
            "rel_err",
            "route_rel_err",
            "pass",
        ]);
        for r in &self.records {
            out.row(&[
                r.alpha.clone(),
                join_y(&r.y),
                r.case_tag.into(),
                fmt_e(r.degree_total),
                fmt_e(r.b_phi_sum_route),
                fmt_e(r.b_phi_closed_route),
                fmt_e(r.rhs),
                fmt_e(r.abs_err),
                fmt_e(r.rel_err),
                fmt_e(r.route_rel_err),
                r.pass.to_string(),
            ]);
        }
        out.finish()
    }
}

pub fn join_y(y: &[f64]) -> String {
    y.iter().map(|v| fmt_e(*v)).collect::<Vec<_>>().join(" ")
}

/// Minimal CSV writer; fields containing `,` or `"` are quoted.
pub struct Csv {
    buf: String,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut csv = Csv { buf: String::new() };
        csv.row(&header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        csv
    }

    pub fn row(&mut self, fields: &[String]) {
        let cells: Vec<String> = fields
            .iter()
            .map(|f| if f.contains([',', '"', '\n']) { format!("\"{}\"", f.replace('"', "\"\"")) } else { f.clone() })
            .collect();
        self.buf.push_str(&cells.join(","));
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_style_exponent() {
        assert_eq!(fmt_e(0.5493061443340548), "5.493061443340548e-01");
        assert_eq!(fmt_e(0.0), "0.000000000000000e+00");
        assert_eq!(fmt_e(-1.5e120), "-1.500000000000000e+120");
        assert_eq!(fmt_e(1e-300), "1.000000000000000e-300");
        assert_eq!(fmt_e(f64::NAN), "nan");
    }

    #[test]
    fn csv_quoting() {
        let mut c = Csv::new(&["a", "b"]);
        c.row(&["1,2".into(), "x".into()]);
        assert_eq!(c.finish(), "a,b\n\"1,2\",x\n");
    }
}
