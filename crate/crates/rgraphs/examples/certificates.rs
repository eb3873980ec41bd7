//! Certificates: every result serializes to JSON bound to the subject graph
//! by its canonical hash, and the checker re-verifies it with the
//! independent validators — tampering is caught.

use rgraphs::certificate::{check_certificate, cover_certificate, trace_certificate};
use rgraphs::fixtures;
use rgraphs::matching::find_tr_pm;
use rgraphs::reduce::{reduce_k5_free, PlanarOracle};

fn main() {
    let g = fixtures::petersen();
    let cover = find_tr_pm(&g, 2, 3, None).unwrap().unwrap();
    let cert = cover_certificate(&g, &cover);
    println!("tr-pm certificate:\n{}\n", serde_json::to_string_pretty(&cert).unwrap());
    println!("check: {:?}", check_certificate(&g, &cert).is_ok());

    let mut tampered = cert.clone();
    let id = tampered.payload["matchings"][0][0].as_u64().unwrap();
    tampered.payload["matchings"][0][0] = serde_json::json!(id ^ 1);
    println!("check after single-bit tamper: {:?}", check_certificate(&g, &tampered));

    let g = fixtures::prism();
    let (_, trace) = reduce_k5_free(&g, 1, 3, &PlanarOracle::exact()).unwrap();
    let cert = trace_certificate(&g, &trace);
    println!("\nreduction-trace certificate for the prism checks: {:?}", check_certificate(&g, &cert).is_ok());
}
