//! The JSON forms used on stdin and stdout.
//!
//! A coefficient is a list of `[exponent, "p/q"]` pairs sorted by exponent, with
//! rationals in lowest terms and the denominator always written out. A symmetric
//! function is `{"basis": "h", "terms": [{"part": [2, 1], "coef": [[0, "1/1"]]}]}`
//! with terms sorted by weight and then by descending partition.

use serde::{Deserialize, Serialize};
use skewsym::symfun::{Basis, SymElem};
use skewsym::{Partition, QPoly, Rational};

use crate::CliError;

pub type CoefJson = Vec<(usize, String)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub part: Vec<usize>,
    pub coef: CoefJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymJson {
    pub basis: String,
    pub terms: Vec<TermJson>,
}

fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn poly_to_json(p: &QPoly) -> CoefJson {
    p.terms().map(|(e, c)| (e, rational_to_string(c))).collect()
}

pub fn poly_from_json(c: &[(usize, String)]) -> Result<QPoly, CliError> {
    let mut out = QPoly::zero();
    for (e, s) in c {
        let r: Rational = s
            .trim()
            .parse()
            .map_err(|_| CliError::new(format!("cannot parse rational {s:?}")))?;
        out.add_monomial(*e, &r);
    }
    Ok(out)
}

pub fn sym_to_json(f: &SymElem) -> SymJson {
    // `Partition`'s order is weight first, then reverse lexicographic.
    SymJson {
        basis: f.basis().symbol().to_string(),
        terms: f
            .terms()
            .iter()
            .map(|(lambda, c)| TermJson {
                part: lambda.parts().to_vec(),
                coef: poly_to_json(c),
            })
            .collect(),
    }
}

pub fn sym_from_json(j: &SymJson) -> Result<SymElem, CliError> {
    let basis: Basis = j.basis.parse().map_err(CliError::new)?;
    let mut f = SymElem::zero(basis);
    for t in &j.terms {
        let lambda = Partition::new(t.part.clone()).map_err(CliError::from)?;
        f.add_term(lambda, &poly_from_json(&t.coef)?);
    }
    Ok(f)
}

pub fn parse_sym(text: &str) -> Result<SymElem, CliError> {
    let j: SymJson = serde_json::from_str(text)
        .map_err(|e| CliError::new(format!("malformed symmetric function JSON: {e}")))?;
    sym_from_json(&j)
}

pub fn render<T: Serialize>(value: &T, pretty: bool) -> String {
    let out = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    };
    out.expect("report types serialize infallibly")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let text = r#"{"basis":"e","terms":[{"part":[1],"coef":[[0,"-1/2"],[3,"2/1"]]},{"part":[3],"coef":[[0,"1/1"]]},{"part":[2,1],"coef":[[1,"1/1"]]}]}"#;
        let f = parse_sym(text).unwrap();
        assert_eq!(render(&sym_to_json(&f), false), text);
    }

    #[test]
    fn input_is_normalized() {
        // Unsorted terms, repeated partitions, integer rationals and zeros.
        let text = r#"{"basis":"h","terms":[{"part":[2],"coef":[[0,"2/4"]]},{"part":[1],"coef":[[0,"0"]]},{"part":[2],"coef":[[0,"1/2"]]}]}"#;
        let f = parse_sym(text).unwrap();
        assert_eq!(
            render(&sym_to_json(&f), false),
            r#"{"basis":"h","terms":[{"part":[2],"coef":[[0,"1/1"]]}]}"#
        );
    }

    #[test]
    fn malformed_input_is_rejected() {
        for bad in [
            r#"{"basis":"x","terms":[]}"#,
            r#"{"basis":"h","terms":[{"part":[1,2],"coef":[]}]}"#,
            r#"{"basis":"h","terms":[{"part":[0],"coef":[]}]}"#,
            r#"{"basis":"h","terms":[{"part":[1],"coef":[[0,"1/0"]]}]}"#,
            r#"{"basis":"h","terms":[],"extra":1}"#,
            "not json",
        ] {
            assert!(parse_sym(bad).is_err(), "{bad}");
        }
    }
}
