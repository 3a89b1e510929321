//! Write a graph file, read it back, and emit a JSON report.

use rainbow_census::bounds::TheoremId;
use rainbow_census::census::count_rainbow_fast;
use rainbow_census::generators::example3;
use rainbow_census::io::{parse_ecg_document, write_ecg_with_comments};
use rainbow_census::report::{Provenance, Report};
use rainbow_census::verify::{verify, VerifyOptions};

fn main() -> rainbow_census::Result<()> {
    let text = write_ecg_with_comments(&example3(7)?, &["family: example3".into()]);
    let doc = parse_ecg_document(&text)?;
    let g = &doc.graph;

    let out = verify(g, &VerifyOptions::new(vec![TheoremId::Rt1, TheoremId::Rt2]))?;
    let mut report = Report::new(g, count_rainbow_fast(g), Provenance::new(vec!["report_json".into()], None)).with_order_notes();
    report.verdicts = out.verdicts;
    report.notes.extend(doc.comments);

    let json = report.to_json();
    assert_eq!(Report::from_json(&json).expect("round trip"), report);
    println!("{json}");
    Ok(())
}
