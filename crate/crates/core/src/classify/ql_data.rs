//! Embedded quasi-Lanner catalogue (generated; see `tests/quasi_lanner_table.rs`).

pub(super) static QUASI_LANNER_MANIFEST: &str = include_str!("../../tables/ql_manifest.tsv");

pub(super) static QUASI_LANNER_FILES: &[(&str, &str)] = &[
    ("ql04_01.cox", include_str!("../../tables/ql04_01.cox")),
    ("ql04_02.cox", include_str!("../../tables/ql04_02.cox")),
    ("ql04_03.cox", include_str!("../../tables/ql04_03.cox")),
    ("ql04_04.cox", include_str!("../../tables/ql04_04.cox")),
    ("ql04_05.cox", include_str!("../../tables/ql04_05.cox")),
    ("ql04_06.cox", include_str!("../../tables/ql04_06.cox")),
    ("ql04_07.cox", include_str!("../../tables/ql04_07.cox")),
    ("ql04_08.cox", include_str!("../../tables/ql04_08.cox")),
    ("ql04_09.cox", include_str!("../../tables/ql04_09.cox")),
    ("ql04_10.cox", include_str!("../../tables/ql04_10.cox")),
    ("ql04_11.cox", include_str!("../../tables/ql04_11.cox")),
    ("ql04_12.cox", include_str!("../../tables/ql04_12.cox")),
    ("ql04_13.cox", include_str!("../../tables/ql04_13.cox")),
    ("ql04_14.cox", include_str!("../../tables/ql04_14.cox")),
    ("ql04_15.cox", include_str!("../../tables/ql04_15.cox")),
    ("ql04_16.cox", include_str!("../../tables/ql04_16.cox")),
    ("ql04_17.cox", include_str!("../../tables/ql04_17.cox")),
    ("ql04_18.cox", include_str!("../../tables/ql04_18.cox")),
    ("ql04_19.cox", include_str!("../../tables/ql04_19.cox")),
    ("ql04_20.cox", include_str!("../../tables/ql04_20.cox")),
    ("ql04_21.cox", include_str!("../../tables/ql04_21.cox")),
    ("ql04_22.cox", include_str!("../../tables/ql04_22.cox")),
    ("ql04_23.cox", include_str!("../../tables/ql04_23.cox")),
    ("ql04_24.cox", include_str!("../../tables/ql04_24.cox")),
    ("ql04_25.cox", include_str!("../../tables/ql04_25.cox")),
    ("ql04_26.cox", include_str!("../../tables/ql04_26.cox")),
    ("ql04_27.cox", include_str!("../../tables/ql04_27.cox")),
    ("ql04_28.cox", include_str!("../../tables/ql04_28.cox")),
    ("ql04_29.cox", include_str!("../../tables/ql04_29.cox")),
    ("ql04_30.cox", include_str!("../../tables/ql04_30.cox")),
    ("ql04_31.cox", include_str!("../../tables/ql04_31.cox")),
    ("ql04_32.cox", include_str!("../../tables/ql04_32.cox")),
    ("ql05_01.cox", include_str!("../../tables/ql05_01.cox")),
    ("ql05_02.cox", include_str!("../../tables/ql05_02.cox")),
    ("ql05_03.cox", include_str!("../../tables/ql05_03.cox")),
    ("ql05_04.cox", include_str!("../../tables/ql05_04.cox")),
    ("ql05_05.cox", include_str!("../../tables/ql05_05.cox")),
    ("ql05_06.cox", include_str!("../../tables/ql05_06.cox")),
    ("ql05_07.cox", include_str!("../../tables/ql05_07.cox")),
    ("ql05_08.cox", include_str!("../../tables/ql05_08.cox")),
    ("ql05_09.cox", include_str!("../../tables/ql05_09.cox")),
    ("ql05_10.cox", include_str!("../../tables/ql05_10.cox")),
    ("ql05_11.cox", include_str!("../../tables/ql05_11.cox")),
    ("ql05_12.cox", include_str!("../../tables/ql05_12.cox")),
    ("ql05_13.cox", include_str!("../../tables/ql05_13.cox")),
    ("ql05_14.cox", include_str!("../../tables/ql05_14.cox")),
    ("ql06_01.cox", include_str!("../../tables/ql06_01.cox")),
    ("ql06_02.cox", include_str!("../../tables/ql06_02.cox")),
    ("ql06_03.cox", include_str!("../../tables/ql06_03.cox")),
    ("ql06_04.cox", include_str!("../../tables/ql06_04.cox")),
    ("ql06_05.cox", include_str!("../../tables/ql06_05.cox")),
    ("ql06_06.cox", include_str!("../../tables/ql06_06.cox")),
    ("ql06_07.cox", include_str!("../../tables/ql06_07.cox")),
    ("ql06_08.cox", include_str!("../../tables/ql06_08.cox")),
    ("ql06_09.cox", include_str!("../../tables/ql06_09.cox")),
    ("ql06_10.cox", include_str!("../../tables/ql06_10.cox")),
    ("ql06_11.cox", include_str!("../../tables/ql06_11.cox")),
    ("ql06_12.cox", include_str!("../../tables/ql06_12.cox")),
    ("ql07_01.cox", include_str!("../../tables/ql07_01.cox")),
    ("ql07_02.cox", include_str!("../../tables/ql07_02.cox")),
    ("ql07_03.cox", include_str!("../../tables/ql07_03.cox")),
    ("ql08_01.cox", include_str!("../../tables/ql08_01.cox")),
    ("ql08_02.cox", include_str!("../../tables/ql08_02.cox")),
    ("ql08_03.cox", include_str!("../../tables/ql08_03.cox")),
    ("ql08_04.cox", include_str!("../../tables/ql08_04.cox")),
    ("ql09_01.cox", include_str!("../../tables/ql09_01.cox")),
    ("ql09_02.cox", include_str!("../../tables/ql09_02.cox")),
    ("ql09_03.cox", include_str!("../../tables/ql09_03.cox")),
    ("ql09_04.cox", include_str!("../../tables/ql09_04.cox")),
    ("ql10_01.cox", include_str!("../../tables/ql10_01.cox")),
    ("ql10_02.cox", include_str!("../../tables/ql10_02.cox")),
    ("ql10_03.cox", include_str!("../../tables/ql10_03.cox")),
];
