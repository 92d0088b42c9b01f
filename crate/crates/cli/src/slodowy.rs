//! The exceptional Slodowy-slice table shipped as data.
//!
//! The library encodes the same lookup in code; the data file is what
//! downstream tools read, and the two are checked against each other.

use chamberwalk_core::rootsys::{CartanType, Letter};
use chamberwalk_core::slice::OrbitTag;
use serde::Deserialize;

pub const TABLE_JSON: &str = include_str!("../data/slodowy.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Table {
    pub version: u32,
    pub description: String,
    pub rows: Vec<Row>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Row {
    pub ambient: char,
    pub tag: String,
    pub target: char,
    pub rank_scale: i64,
    pub rank_offset: i64,
}

pub fn table() -> Table {
    serde_json::from_str(TABLE_JSON).expect("shipped table parses")
}

impl Table {
    /// `None` when the tag does not apply to the ambient type.
    pub fn lookup(&self, ambient: CartanType, tag: OrbitTag) -> Option<CartanType> {
        let n = ambient.rank();
        let key = match tag {
            OrbitTag::Default => return Some(ambient),
            OrbitTag::CPairSplit(i) if !(1 < i && 2 * i <= n) => return None,
            OrbitTag::CPairSplit(_) => "c-pair-split".to_owned(),
            other => other.to_string(),
        };
        let row = self
            .rows
            .iter()
            .find(|r| r.ambient == ambient.letter().as_char() && r.tag == key)?;
        let rank = usize::try_from(row.rank_scale * n as i64 + row.rank_offset).ok()?;
        let letter = Letter::from_char(row.target)?;
        if letter == Letter::D && rank == 3 {
            return CartanType::new(Letter::A, 3).ok();
        }
        CartanType::new(letter, rank).ok()
    }
}
