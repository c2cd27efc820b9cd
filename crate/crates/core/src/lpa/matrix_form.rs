//! The relations of `L_K(B)` written with one symbolic matrix per block.
//!
//! `V_v = (ρ^v_{ij})`, `E_α = (σ^α_{ij})`, `E_α* = (σ̄^α_{ij})`, and
//! `A □ B` is the block-diagonal sum. The `□` sums follow the diagonal
//! order of the source and range embeddings.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::hom::RegularEmbedding;
use crate::quiver::QuantumQuiver;

fn boxed(q: &QuantumQuiver, t: &RegularEmbedding, edge: usize) -> String {
    let parts: Vec<String> = t
        .slots(edge)
        .iter()
        .map(|s| format!("V_{}", q.vertex_shape().id(s.vertex)))
        .collect();
    if parts.len() == 1 {
        parts.into_iter().next().expect("one part")
    } else {
        format!("({})", parts.join(" □ "))
    }
}

/// Multi-line text rendering of the block-matrix relations.
pub fn emit_matrix_form(q: &QuantumQuiver) -> String {
    let (b0, b1) = (q.vertex_shape(), q.edge_shape());
    let mut out = String::new();
    for b in b0.blocks() {
        let _ = writeln!(out, "V_{0} = (rho^{0}_{{i,j}}), {1}x{1}", b.id, b.size);
    }
    for b in b1.blocks() {
        let _ = writeln!(
            out,
            "E_{0} = (sig^{0}_{{i,j}}), E_{0}* = (sigbar^{0}_{{i,j}}), {1}x{1}",
            b.id, b.size
        );
    }

    out.push_str("\nidempotents:\n");
    for (n, class) in classes(q) {
        for &v in &class {
            let _ = writeln!(out, "  V_{0} V_{0} = V_{0}", b0.id(v));
        }
        for &v in &class {
            for &w in &class {
                if v != w {
                    let _ = writeln!(out, "  V_{} V_{} = 0_{n}", b0.id(v), b0.id(w));
                }
            }
        }
    }

    out.push_str("\nsize classes:\n");
    for (n, class) in classes(q) {
        let sum: Vec<String> = class.iter().map(|&v| format!("V_{}", b0.id(v))).collect();
        let _ = writeln!(out, "  {} = I_{n}", sum.join(" + "));
    }

    for a in 0..b1.len() {
        let e = b1.id(a);
        let src = boxed(q, q.source(), a);
        let rng = boxed(q, q.range(), a);
        let _ = writeln!(out, "\nedge {e}:");
        let _ = writeln!(out, "  E_{e}* E_{e} = {rng}");
        let _ = writeln!(out, "  {src} = E_{e} E_{e}*");
        let _ = writeln!(out, "  {src} E_{e} = E_{e} = E_{e} {rng}");
        let _ = writeln!(out, "  {rng} E_{e}* = E_{e}* = E_{e}* {src}");
    }
    out
}

fn classes(q: &QuantumQuiver) -> Vec<(usize, Vec<usize>)> {
    let b0 = q.vertex_shape();
    b0.distinct_sizes()
        .into_iter()
        .map(|n| (n, (0..b0.len()).filter(|&v| b0.size(v) == n).collect()))
        .collect()
}
