mod common;

use common::Atoms;
use ordtruth::batch::{axiom_check_all, axiom_check_all_seq, check_proofs, check_proofs_seq};
use ordtruth::proofs::{template_prog_numeral, Proof};
use ordtruth::theories::{axiom_enumerate, TheorySpec};

#[test]
fn batch_paths_agree_on_mixed_proofs() {
    let theory = TheorySpec::tarski(TheorySpec::pa());
    let mut r = common::rng(7);
    let mut proofs: Vec<Proof> = (0..24)
        .map(|i| {
            let a = common::predicate(&mut r, 2, Atoms::SimpleTruth);
            template_prog_numeral(&a, i % 4, &theory).unwrap()
        })
        .collect();
    // corrupt every third proof so both outcomes appear
    for p in proofs.iter_mut().step_by(3) {
        let last = p.lines.len() - 1;
        p.lines.swap(0, last);
    }
    let seq = check_proofs_seq(&theory, &proofs);
    assert_eq!(seq, check_proofs(&theory, &proofs));
    assert!(seq.iter().any(Result::is_ok) && seq.iter().any(Result::is_err));
}

#[test]
fn batch_paths_agree_on_axiom_candidates() {
    let theory = TheorySpec::tarski_ord(TheorySpec::pa());
    let mut r = common::rng(11);
    let mut fs: Vec<_> = axiom_enumerate(&theory, 200).into_iter().map(|(f, _)| f).collect();
    let mutants: Vec<_> = fs.iter().map(|f| common::mutate(&mut r, f)).collect();
    fs.extend(mutants);
    let seq = axiom_check_all_seq(&theory, &fs);
    assert_eq!(seq, axiom_check_all(&theory, &fs));
    assert!(seq[..200].iter().all(Result::is_ok));
}
