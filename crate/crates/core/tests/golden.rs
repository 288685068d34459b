//! Byte-identity checks against the golden serializations stored in
//! tests/golden/. Any change to vertex order, label text, or edge emission
//! shows up here as a diff against a frozen file.

use segre_core::hypercube::{from_json, generate_hypercube, to_dot, to_json};

const DOT_GOLDENS: [(usize, &str); 4] = [
    (2, include_str!("golden/segre_q2.dot")),
    (3, include_str!("golden/segre_q3.dot")),
    (4, include_str!("golden/segre_q4.dot")),
    (5, include_str!("golden/segre_q5.dot")),
];

const JSON_GOLDENS: [(usize, &str); 4] = [
    (2, include_str!("golden/segre_q2.json")),
    (3, include_str!("golden/segre_q3.json")),
    (4, include_str!("golden/segre_q4.json")),
    (5, include_str!("golden/segre_q5.json")),
];

#[test]
fn dot_serialization_is_byte_identical_to_golden_files() {
    for (n, golden) in DOT_GOLDENS {
        let graph = generate_hypercube(n).unwrap();
        assert_eq!(to_dot(&graph), golden, "dot output drifted for n = {n}");
    }
}

#[test]
fn json_serialization_is_byte_identical_to_golden_files() {
    // The files carry a trailing newline added when they were written out.
    for (n, golden) in JSON_GOLDENS {
        let graph = generate_hypercube(n).unwrap();
        let text = to_json(&graph);
        assert_eq!(
            format!("{text}\n"),
            golden,
            "json output drifted for n = {n}"
        );
    }
}

#[test]
fn golden_json_files_parse_back_to_the_generated_graphs() {
    for (n, golden) in JSON_GOLDENS {
        let parsed = from_json(golden).unwrap();
        let generated = generate_hypercube(n).unwrap();
        assert_eq!(parsed, generated, "round trip mismatch for n = {n}");
    }
}
