//! Exhaustive small-rank properties of the tableau crystals: operator
//! inverses, the column sorting intertwiner, and Demazure truncations.

use demazure_core::composition::{sort_composition, Partition, WeakComposition};
use demazure_core::crystal::{build_crystal, demazure_truncate};
use demazure_core::key::{column_sort_inverse, enumerate_sskt, KeyTableau};
use demazure_core::poly::{demazure_character, schur_via_ssyt};
use demazure_core::ssyt::{enumerate_ssyt, Ssyt};

fn compositions(len: usize, max_part: usize) -> Vec<WeakComposition> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|b: Vec<usize>| {
                (0..=max_part).map(move |p| {
                    let mut next = b.clone();
                    next.push(p);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(WeakComposition::new).collect()
}

fn partitions_inside(rows: usize, max_part: usize) -> Vec<Partition> {
    compositions(rows, max_part)
        .into_iter()
        .filter(|a| a.is_weakly_decreasing())
        .map(|a| Partition::new(a.parts().to_vec()).unwrap())
        .collect()
}

#[test]
fn ssyt_components_have_unique_sources() {
    for lambda in partitions_inside(3, 3) {
        for n in 1..=4usize {
            let crystal = build_crystal(enumerate_ssyt(&lambda, n), n.saturating_sub(1), n).unwrap();
            if crystal.is_empty() {
                continue;
            }
            // B(lambda) is connected with u_lambda as its unique source
            assert_eq!(crystal.components().len(), 1, "B({lambda}) over n = {n}");
            let sources = crystal.highest_weight_nodes();
            assert_eq!(sources.len(), 1);
            assert_eq!(
                crystal.node(sources[0]),
                &Ssyt::highest_weight(&lambda, n).unwrap()
            );
        }
    }
}

#[test]
fn ssyt_crystal_character_is_schur() {
    for lambda in partitions_inside(3, 3) {
        for n in 1..=4usize {
            let crystal = build_crystal(enumerate_ssyt(&lambda, n), n.saturating_sub(1), n).unwrap();
            assert_eq!(crystal.character(), schur_via_ssyt(&lambda, n));
        }
    }
}

#[test]
fn key_operators_are_mutually_inverse() {
    for a in compositions(4, 3) {
        let n = a.len();
        for t in enumerate_sskt(&a) {
            for i in 1..n {
                if let Some(raised) = t.raise(i) {
                    assert!(raised.is_semistandard(), "e_{i} broke {a}");
                    assert_eq!(raised.shape(), a);
                    assert_eq!(raised.lower(i).as_ref(), Some(&t), "f_{i} fails to invert e_{i}");
                    let wt = t.weight().padded(n);
                    let wr = raised.weight().padded(n);
                    assert_eq!(wr.part(i), wt.part(i) + 1);
                    assert_eq!(wr.part(i + 1) + 1, wt.part(i + 1));
                }
                if let Some(lowered) = t.lower(i) {
                    assert!(lowered.is_semistandard());
                    assert_eq!(lowered.raise(i).as_ref(), Some(&t), "e_{i} fails to invert f_{i}");
                }
            }
        }
    }
}

#[test]
fn column_sorting_intertwines_operators() {
    // raising on key tableaux matches lowering of the complementary color on
    // the sorted side
    for a in compositions(4, 3) {
        let n = a.len();
        for t in enumerate_sskt(&a) {
            let sorted = t.column_sort(n);
            assert_eq!(sorted.shape().trimmed(), a.sorted().trimmed());
            for i in 1..n {
                let lhs = t.raise(i).map(|r| r.column_sort(n));
                let rhs = sorted.lower(n - i);
                assert_eq!(lhs, rhs, "shape {a}, color {i}");
            }
        }
    }
}

#[test]
fn column_sort_round_trips() {
    for a in compositions(4, 3) {
        for t in enumerate_sskt(&a) {
            let sorted = t.column_sort(a.len());
            let back = column_sort_inverse(&sorted, &a).unwrap();
            assert_eq!(back.as_ref(), Some(&t));
        }
    }
}

#[test]
fn key_tableaux_avoid_the_crossing_pattern() {
    // two adjacent entries i+1 in one row never see an i above the left one
    // and another i below the right one
    for a in compositions(4, 3) {
        for t in enumerate_sskt(&a) {
            let rows = t.rows();
            for (r, row) in rows.iter().enumerate() {
                for c in 0..row.len().saturating_sub(1) {
                    if row[c] != row[c + 1] || row[c] == 0 {
                        continue;
                    }
                    let i = row[c] - 1;
                    if i == 0 {
                        continue;
                    }
                    let above_left = rows
                        .iter()
                        .enumerate()
                        .any(|(rr, other)| rr > r && other.get(c) == Some(&i));
                    let below_right = rows
                        .iter()
                        .enumerate()
                        .any(|(rr, other)| rr < r && other.get(c + 1) == Some(&i));
                    assert!(!(above_left && below_right), "crossing pattern in {t:?}");
                }
            }
        }
    }
}

#[test]
fn sskt_image_matches_truncation_through_the_flip() {
    // phi sends SSKT(a) onto the color-and-direction flip of the Demazure
    // subset B_w(lambda); node sets are compared through a basepointed walk
    for a in compositions(4, 2) {
        let n = a.len();
        if a.sum() == 0 {
            continue;
        }
        let (lambda, _, word) = sort_composition(&a);
        let sskt = enumerate_sskt(&a);
        let u = Ssyt::highest_weight(&lambda, n).unwrap();
        let ambient = build_crystal(enumerate_ssyt(&lambda, n), n - 1, n).unwrap();
        let u_id = ambient.node_id(&u).unwrap();
        let subset = demazure_truncate(&ambient, u_id, &word).unwrap();
        assert_eq!(subset.len(), sskt.len(), "size mismatch for {a}");
        assert_eq!(ambient.subset_character(&subset), demazure_character(&a));
        // basepointed walk: the key-side source (every e_i absent) pairs with
        // u_lambda, and lowering matches color for color, the truncation side
        // restricted to its members
        let key_source: Vec<&KeyTableau> = sskt
            .iter()
            .filter(|t| (1..n).all(|i| t.raise(i).is_none()))
            .collect();
        assert_eq!(key_source.len(), 1);
        let mut paired = std::collections::BTreeMap::new();
        let mut frontier = vec![(key_source[0].clone(), u_id)];
        paired.insert(key_source[0].clone(), u_id);
        while let Some((t, y)) = frontier.pop() {
            assert_eq!(
                t.weight().trimmed(),
                ambient.node(y).weight().trimmed(),
                "weights differ for {a}"
            );
            for i in 1..n {
                let lhs = t.lower(i);
                let rhs = ambient
                    .lower_edge(y, i)
                    .filter(|next| subset.contains(*next));
                match (lhs, rhs) {
                    (None, None) => {}
                    (Some(nt), Some(ny)) => {
                        let seen = paired.insert(nt.clone(), ny);
                        if let Some(old) = seen {
                            assert_eq!(old, ny, "bijection broken for {a}");
                        } else {
                            frontier.push((nt, ny));
                        }
                    }
                    (lhs, rhs) => panic!("defined on one side only for {a}: {lhs:?} {rhs:?}"),
                }
            }
        }
        assert_eq!(paired.len(), sskt.len(), "walk missed nodes for {a}");
    }
}

#[test]
fn truncation_is_word_independent() {
    for a in compositions(4, 2) {
        let n = a.len();
        if a.sum() == 0 {
            continue;
        }
        let (lambda, w, _) = sort_composition(&a);
        let u = Ssyt::highest_weight(&lambda, n).unwrap();
        let ambient = build_crystal(enumerate_ssyt(&lambda, n), n - 1, n).unwrap();
        let u_id = ambient.node_id(&u).unwrap();
        let members: Vec<_> = w
            .reduced_words()
            .into_iter()
            .map(|word| demazure_truncate(&ambient, u_id, &word).unwrap())
            .map(|s| s.members().clone())
            .collect();
        for m in &members[1..] {
            assert_eq!(m, &members[0], "truncation depends on the word for {a}");
        }
    }
}

#[test]
fn truncation_characters_are_demazure_characters() {
    for a in compositions(4, 3) {
        let n = a.len();
        if a.sum() == 0 {
            continue;
        }
        let (lambda, _, word) = sort_composition(&a);
        let u = Ssyt::highest_weight(&lambda, n).unwrap();
        let ambient = build_crystal(enumerate_ssyt(&lambda, n), n - 1, n).unwrap();
        let u_id = ambient.node_id(&u).unwrap();
        let subset = demazure_truncate(&ambient, u_id, &word).unwrap();
        assert_eq!(ambient.subset_character(&subset), demazure_character(&a));
        // raising never leaves a truncation
        for &id in subset.members() {
            for i in 1..n {
                if let Some(parent) = ambient.node(id).raise(i) {
                    let pid = ambient.node_id(&parent).unwrap();
                    assert!(subset.contains(pid));
                }
            }
        }
    }
}

#[test]
fn sorting_operators_reach_the_partition_shape() {
    for a in compositions(4, 2) {
        let (lambda, _, word) = sort_composition(&a);
        let target = enumerate_sskt(&lambda.as_composition());
        assert_eq!(target.len(), 1);
        let target = target.into_iter().next().unwrap();
        for t in enumerate_sskt(&a) {
            let mut current = t;
            for &i in &word {
                current = current.sorting_raise(i).unwrap();
            }
            assert_eq!(current, target, "sorting operators missed for {a}");
        }
    }
}
