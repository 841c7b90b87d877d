//! Serializing then parsing any instance gives back the same spec and the
//! same algebra.

use proptest::prelude::*;
use wdl::corpus::{enumerated_dicomplementations, named_and_trivial};
use wdl::format::{parse, serialize, spec_of};
use wdl_core::Dicomplementation;

#[test]
fn corpus_round_trips() {
    for inst in named_and_trivial().into_iter().chain(enumerated_dicomplementations()) {
        let spec = spec_of(&inst.algebra);
        let text = serialize(&spec);
        assert_eq!(parse(&text).unwrap(), spec, "{}", inst.name);
        let back = Dicomplementation::from_spec(&spec, 64).unwrap();
        assert_eq!(back.delta_table().ok(), inst.algebra.delta_table().ok(), "{}", inst.name);
        assert_eq!(back.nabla_table().ok(), inst.algebra.nabla_table().ok(), "{}", inst.name);
    }
}

proptest! {
    #[test]
    fn chains_round_trip(n in 1usize..=20) {
        let d = wdl::builtin::builtin(&format!("chain-{n}-trivial")).unwrap();
        let spec = spec_of(&d);
        prop_assert_eq!(parse(&serialize(&spec)).unwrap(), spec);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(k in 0usize..4, idx in 0usize..15) {
        let all = named_and_trivial();
        let inst = &all[idx % all.len()];
        let spec = spec_of(&inst.algebra);
        let noisy: String = serialize(&spec)
            .lines()
            .flat_map(|l| std::iter::repeat_n("# noise\n\n".to_string(), k).chain(std::iter::once(format!("{l}\n"))))
            .collect();
        prop_assert_eq!(parse(&noisy).unwrap(), spec);
    }

    #[test]
    fn parser_never_panics(text in "[a-z0-9:# \n]{0,80}") {
        let _ = parse(&text);
    }
}
