//! The shipped fixture files mirror the constructors byte for byte, and all
//! of them round-trip through the text format.

use rgraphs::{fixtures, format};

#[test]
fn fixture_files_match_constructors() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let items: Vec<(&str, rgraphs::Multigraph)> = vec![
        ("petersen", fixtures::petersen()),
        ("wagner-v8", fixtures::wagner_v8()),
        ("k33", fixtures::k33()),
        ("k4", fixtures::k4()),
        ("k5", fixtures::k5()),
        ("prism", fixtures::prism()),
        ("c4", fixtures::c4()),
        ("c4-doubled", fixtures::c4_doubled()),
        ("c4-2121", fixtures::c4_2121()),
        ("c6-doubled", fixtures::c6_doubled()),
        ("cube", fixtures::cube_q3()),
        ("theta3", fixtures::theta3()),
        ("k33-blown", fixtures::k33_blown()),
        ("bridge-cubic", fixtures::bridged_cubic()),
        ("expanded-k33-r4", fixtures::expanded_k33_r4()),
        ("three-book-r6", fixtures::three_book_r6()),
        ("v8-two-sum", fixtures::v8_two_sum()),
        ("v8-chord-sum", fixtures::v8_chord_sum()),
        ("v8-double-sum", fixtures::v8_double_sum()),
        ("v8-chords-doubled", fixtures::v8_chords_doubled()),
        ("k33-matching-doubled", fixtures::k33_matching_doubled()),
        ("prism-pm-doubled", fixtures::prism_pm_doubled()),
    ];
    for (name, g) in items {
        let path = format!("{dir}/{name}.g");
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
        assert_eq!(text, format::to_text(&g), "{name}.g differs from its constructor");
        let parsed = format::parse(&text).unwrap();
        assert_eq!(parsed, g, "{name}.g does not parse back to its constructor");
    }
}
