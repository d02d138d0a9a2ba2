use std::collections::BTreeMap;

use serde::Serialize;

use super::intersection::IntersectionNumbers;
use super::spectral::SpectralSystem;

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionExport {
    pub k: String,
    pub b: Vec<String>,
    pub c: Vec<String>,
    pub a: Vec<String>,
    /// `"h,i,j"` to `p^h_{ij}`.
    pub p: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumExport {
    pub q: u64,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "D")]
    pub d: usize,
    pub theta: Vec<String>,
    pub mult: Vec<usize>,
    pub theta_star: Vec<String>,
    pub intersection_numbers: IntersectionExport,
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn spectrum_export(ss: &SpectralSystem, ints: &IntersectionNumbers) -> SpectrumExport {
    let d = ss.d();
    let mut p = BTreeMap::new();
    for h in 0..=d {
        for i in 0..=d {
            for j in 0..=d {
                p.insert(format!("{h},{i},{j}"), ints.p[h][i][j].to_string());
            }
        }
    }
    SpectrumExport {
        q: ss.q(),
        n: ss.n(),
        d,
        theta: strings(ss.theta()),
        mult: ss.mult().to_vec(),
        // BigRational displays integers without a denominator
        theta_star: ss.theta_star().iter().map(|t| format!("{}/{}", t.numer(), t.denom())).collect(),
        intersection_numbers: IntersectionExport {
            k: ints.k.to_string(),
            b: strings(&ints.b),
            c: strings(&ints.c),
            a: strings(&ints.a),
            p,
        },
    }
}
