//! Polytopes bundled with the crate.

use crate::error::{Error, Result};
use crate::io::PolytopeDocument;

const FIXTURES: &[(&str, &str)] = &[
    ("p2", include_str!("../fixtures/p2.json")),
    ("f1", include_str!("../fixtures/f1.json")),
    ("blowup-p1xp1", include_str!("../fixtures/blowup-p1xp1.json")),
    ("fano-3-29", include_str!("../fixtures/fano-3-29.json")),
    ("cube2", include_str!("../fixtures/cube2.json")),
    ("cube3", include_str!("../fixtures/cube3.json")),
    ("square-reflexive-nondelzant", include_str!("../fixtures/square-reflexive-nondelzant.json")),
    ("square-delzant-nonreflexive", include_str!("../fixtures/square-delzant-nonreflexive.json")),
    ("dp6", include_str!("../fixtures/dp6.json")),
    ("unit-square", include_str!("../fixtures/unit-square.json")),
];

/// The smooth toric del Pezzo surfaces among the fixtures.
pub const DEL_PEZZO: &[&str] = &["p2", "f1", "cube2", "blowup-p1xp1", "dp6"];

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn load(name: &str) -> Result<PolytopeDocument> {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::InvalidInput(format!("unknown fixture {name:?}; known: {}", names().collect::<Vec<_>>().join(", "))))?;
    PolytopeDocument::from_json(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads() {
        for name in names() {
            let doc = load(name).unwrap();
            assert_eq!(doc.name.as_deref(), Some(name));
            doc.toric_data().unwrap();
        }
        assert!(load("nope").is_err());
    }

    #[test]
    fn del_pezzo_fixtures_are_smooth_and_reflexive() {
        for name in DEL_PEZZO {
            let t = load(name).unwrap().toric_data().unwrap();
            assert!(t.is_delzant() && t.is_reflexive(), "{name}");
        }
    }
}
