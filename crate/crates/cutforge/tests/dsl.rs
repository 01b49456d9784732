mod common;

#[test]
fn corpus_is_valid() {
    common::corpus_runs().unwrap();
}

#[test]
fn print_then_parse() {
    assert_eq!(common::round_trip(10_000, 7).unwrap(), 10_000);
}

#[test]
fn mutated_inputs() {
    let stats = common::fuzz(20_000, 11).unwrap();
    // most mutations break the program
    assert!(stats.errors > stats.runs / 2, "{} errors", stats.errors);
}
