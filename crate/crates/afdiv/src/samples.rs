//! Small hand-built frameworks with known extension structure, used in
//! tests and handy as demo inputs.

use crate::af::{AfBuilder, ArgumentationFramework};

fn build(names: &[&str], attacks: &[(&str, &str)]) -> ArgumentationFramework {
    let mut b = AfBuilder::new();
    for n in names {
        b.add_arg(*n).unwrap();
    }
    for (x, y) in attacks {
        let fx = b.id_of(x).unwrap();
        let fy = b.id_of(y).unwrap();
        b.add_attack(fx, fy).unwrap();
    }
    b.build().unwrap()
}

/// A medical decision under time pressure: start treatment X, start
/// treatment Y, or wait for more data. Its stable extensions are exactly
/// `{sx,bx,ey}`, `{sy,lry,rx}`, and `{w,rx,ey}`: the two treatment
/// positions share nothing, while each shares one argument with waiting.
pub fn medical_triage() -> ArgumentationFramework {
    build(
        &["sx", "sy", "rx", "ey", "bx", "lry", "w"],
        &[
            ("sx", "sy"),
            ("sy", "sx"),
            ("sx", "w"),
            ("w", "sx"),
            ("sy", "w"),
            ("w", "sy"),
            ("sx", "rx"),
            ("rx", "sx"),
            ("sy", "ey"),
            ("ey", "sy"),
            ("bx", "lry"),
            ("lry", "bx"),
            ("ey", "lry"),
            ("lry", "ey"),
            ("sx", "lry"),
            ("lry", "sx"),
            ("rx", "bx"),
            ("w", "lry"),
        ],
    )
}

/// A seven-argument framework whose stable extensions are exactly
/// `{a,e,f}`, `{b,e,g}`, `{a,d,g}`, and `{c,d,f}`; their pairwise
/// distances are 4 and 6 and nothing in between. Under admissible
/// semantics the additional extensions `{d}`, `{e}`, `{f}`, `{g}`,
/// `{d,f}`, `{d,g}`, `{e,f}`, `{e,g}` realize every distance from 1 to 6.
pub fn stable_levels_af() -> ArgumentationFramework {
    build(
        &["a", "b", "c", "d", "e", "f", "g"],
        &[
            ("d", "e"),
            ("e", "d"),
            ("f", "g"),
            ("g", "f"),
            ("d", "b"),
            ("f", "b"),
            ("e", "c"),
            ("b", "c"),
            ("g", "c"),
            ("b", "a"),
            ("c", "a"),
        ],
    )
}

/// An eight-argument framework whose non-empty admissible sets are exactly
/// `{a,c}`, `{e,g}`, `{f,h}`, `{a,c,e,g}`, and `{a,c,f,h}`, realizing the
/// distance levels 2, 4, and 6 but neither 3 nor 5.
pub fn admissible_levels_af() -> ArgumentationFramework {
    build(
        &["a", "b", "c", "d", "e", "f", "g", "h"],
        &[
            ("b", "a"),
            ("c", "b"),
            ("d", "c"),
            ("a", "d"),
            ("d", "d"),
            ("f", "e"),
            ("e", "h"),
            ("h", "g"),
            ("g", "f"),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_extensions, OracleBudget};
    use crate::semantics::Semantics;

    fn family_names(
        af: &ArgumentationFramework,
        sem: Semantics,
    ) -> Vec<Vec<String>> {
        brute_extensions(af, sem, &OracleBudget::default())
            .unwrap()
            .iter()
            .map(|e| {
                let mut v: Vec<String> =
                    e.iter().map(|i| af.name(i).to_string()).collect();
                v.sort();
                v
            })
            .collect()
    }

    fn sorted(mut fam: Vec<Vec<String>>) -> Vec<Vec<String>> {
        fam.sort();
        fam
    }

    fn sets(raw: &[&[&str]]) -> Vec<Vec<String>> {
        sorted(
            raw.iter()
                .map(|s| s.iter().map(|x| x.to_string()).collect())
                .collect(),
        )
    }

    #[test]
    fn medical_triage_stable_family() {
        let af = medical_triage();
        let fam = sorted(family_names(&af, Semantics::Stable));
        assert_eq!(
            fam,
            sets(&[&["bx", "ey", "sx"], &["lry", "rx", "sy"], &["ey", "rx", "w"]])
        );
    }

    #[test]
    fn stable_levels_family() {
        let af = stable_levels_af();
        let fam = sorted(family_names(&af, Semantics::Stable));
        assert_eq!(
            fam,
            sets(&[
                &["a", "e", "f"],
                &["b", "e", "g"],
                &["a", "d", "g"],
                &["c", "d", "f"]
            ])
        );
        let adm = sorted(family_names(&af, Semantics::Admissible));
        assert_eq!(
            adm,
            sets(&[
                &[],
                &["d"],
                &["e"],
                &["f"],
                &["g"],
                &["d", "f"],
                &["d", "g"],
                &["e", "f"],
                &["e", "g"],
                &["a", "e", "f"],
                &["b", "e", "g"],
                &["a", "d", "g"],
                &["c", "d", "f"]
            ])
        );
    }

    #[test]
    fn admissible_levels_family() {
        let af = admissible_levels_af();
        let adm = sorted(family_names(&af, Semantics::Admissible));
        assert_eq!(
            adm,
            sets(&[
                &[],
                &["a", "c"],
                &["e", "g"],
                &["f", "h"],
                &["a", "c", "e", "g"],
                &["a", "c", "f", "h"]
            ])
        );
    }
}
