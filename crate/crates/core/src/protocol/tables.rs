use serde::{Deserialize, Serialize};

use super::variant::{Encoding, VariantId};
use crate::statevec::PauliString;
use crate::{Error, Result};

// Bob's operations, transcribed row by row as (|+⟩ row, |−⟩ row) per
// outcome. Factor order is Bob's qubit order.

const THREE_A_ROWS: [(&str, &str); 16] = [
    ("I I I", "Z I I"),
    ("I Z I", "Z Z I"),
    ("Z I I", "I I I"),
    ("Z Z I", "I Z I"),
    ("I X X", "Z X X"),
    ("I iY X", "Z iY X"),
    ("Z X X", "I X X"),
    ("Z iY X", "I iY X"),
    ("X I I", "iY I I"),
    ("X Z I", "iY Z I"),
    ("iY I I", "X I I"),
    ("iY Z I", "X Z I"),
    ("X X X", "iY X X"),
    ("X iY X", "iY iY X"),
    ("iY X X", "X X X"),
    ("iY iY X", "X iY X"),
];

const THREE_B_ROWS: [(&str, &str); 16] = [
    ("I I I", "I Z I"),
    ("I I Z", "I Z Z"),
    ("I Z I", "I I I"),
    ("I Z Z", "I I Z"),
    ("I I X", "I Z X"),
    ("I I iY", "I Z iY"),
    ("I Z X", "I I X"),
    ("I Z iY", "I I iY"),
    ("X X I", "X iY I"),
    ("X X Z", "X iY Z"),
    ("X iY I", "X X I"),
    ("X iY Z", "X X Z"),
    ("X X X", "X iY X"),
    ("X X iY", "X iY iY"),
    ("X iY X", "X X X"),
    ("X iY iY", "X X iY"),
];

const FOUR_ROWS: [(&str, &str); 4] = [
    ("I I I I", "I I Z I"),
    ("I Z I I", "I Z Z I"),
    ("X X I I", "X X Z I"),
    ("X iY I I", "X iY Z I"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub outcome: usize,
    pub charlie_bit: u8,
    pub correction: PauliString,
}

/// Bob's correction for every (Alice outcome, Charlie bit) pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionTable {
    pub variant: VariantId,
    pub encoding: Encoding,
    /// Ordered by outcome, then by Charlie bit.
    pub rows: Vec<TableRow>,
}

impl CorrectionTable {
    pub fn lookup(&self, outcome: usize, bit: u8) -> Result<&PauliString> {
        self.rows
            .get(2 * outcome + bit as usize)
            .filter(|r| bit < 2 && r.outcome == outcome && r.charlie_bit == bit)
            .map(|r| &r.correction)
            .ok_or(Error::NoSuchRow { outcome, bit })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

fn transcribe(variant: VariantId, encoding: Encoding, table: &[(&str, &str)]) -> CorrectionTable {
    let rows = table
        .iter()
        .enumerate()
        .flat_map(|(outcome, (plus, minus))| {
            [(0u8, *plus), (1u8, *minus)].map(|(charlie_bit, s)| TableRow {
                outcome,
                charlie_bit,
                correction: s.parse().expect("transcribed label"),
            })
        })
        .collect();
    CorrectionTable {
        variant,
        encoding,
        rows,
    }
}

/// Charlie's |−⟩ outcome flips the sign of the branch in which the second GHZ
/// state is |111⟩; in this variant Bob's third qubit belongs to that same GHZ
/// state, so the |−⟩ correction is the |+⟩ correction composed with σz on
/// that qubit. The printed |−⟩ rows instead compose with σz on Bob's second
/// qubit, which belongs to the first GHZ state.
fn repair_three_b(table: &mut CorrectionTable) {
    for outcome in 0..16 {
        let plus = table.rows[2 * outcome].correction.clone();
        let last = plus.factors()[2].times_z();
        table.rows[2 * outcome + 1].correction = plus.with_factor(2, last);
    }
}

/// Bob's correction table for a variant. The paper-literal encoding is the
/// verbatim transcription; the canonical encoding differs only for
/// [`VariantId::ThreeB`], whose Charlie-|−⟩ rows are rebuilt from the |+⟩ rows.
pub fn paper_correction_table(variant: VariantId, encoding: Encoding) -> CorrectionTable {
    match variant {
        VariantId::ThreeA => transcribe(variant, encoding, &THREE_A_ROWS),
        VariantId::ThreeB => {
            let mut table = transcribe(variant, encoding, &THREE_B_ROWS);
            if encoding == Encoding::Canonical {
                repair_three_b(&mut table);
            }
            table
        }
        VariantId::Four => transcribe(variant, encoding, &FOUR_ROWS),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevec::PauliFactor;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn sizes_and_vocabulary() {
        for (id, rows, width) in [
            (VariantId::ThreeA, 32, 3),
            (VariantId::ThreeB, 32, 3),
            (VariantId::Four, 8, 4),
        ] {
            for enc in [Encoding::Canonical, Encoding::PaperLiteral] {
                let t = paper_correction_table(id, enc);
                assert_eq!(t.len(), rows);
                for (k, r) in t.rows.iter().enumerate() {
                    assert_eq!((r.outcome, r.charlie_bit as usize), (k / 2, k % 2));
                    assert_eq!(r.correction.len(), width);
                    assert!(r
                        .correction
                        .factors()
                        .iter()
                        .all(|f| PauliFactor::ALL.contains(f)));
                }
            }
        }
    }

    #[test]
    fn spot_rows() {
        let t1 = paper_correction_table(VariantId::ThreeA, Encoding::PaperLiteral);
        assert_eq!(t1.lookup(0, 0).unwrap(), &p("I I I"));
        assert_eq!(t1.lookup(8, 1).unwrap(), &p("iY I I"));
        let t3 = paper_correction_table(VariantId::Four, Encoding::PaperLiteral);
        assert_eq!(t3.lookup(3, 1).unwrap(), &p("X iY Z I"));
        assert_eq!(
            t3.lookup(4, 0),
            Err(Error::NoSuchRow { outcome: 4, bit: 0 })
        );
        assert_eq!(
            t3.lookup(0, 2),
            Err(Error::NoSuchRow { outcome: 0, bit: 2 })
        );
    }

    #[test]
    fn canonical_matches_literal_except_three_b_minus_rows() {
        for id in VariantId::ALL {
            let lit = paper_correction_table(id, Encoding::PaperLiteral);
            let can = paper_correction_table(id, Encoding::Canonical);
            for (a, b) in lit.rows.iter().zip(&can.rows) {
                let repaired = id == VariantId::ThreeB && a.charlie_bit == 1;
                assert_eq!(a.correction != b.correction, repaired, "{id} {a:?}");
            }
        }
        let can = paper_correction_table(VariantId::ThreeB, Encoding::Canonical);
        assert_eq!(can.lookup(0, 1).unwrap(), &p("I I Z"));
        assert_eq!(can.lookup(1, 1).unwrap(), &p("I I I"));
        assert_eq!(can.lookup(8, 1).unwrap(), &p("X X Z"));
        assert_eq!(can.lookup(4, 1).unwrap(), &p("I I iY"));
    }
}
