macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!($file);

            #[test]
            fn runs() {
                run_example();
            }
        }
    };
}

example!(roots_and_classes, "../examples/roots_and_classes.rs");
example!(character_table, "../examples/character_table.rs");
example!(pin_cover, "../examples/pin_cover.rs");
example!(spin_decomposition, "../examples/spin_decomposition.rs");
example!(type_a_rule, "../examples/type_a_rule.rs");
example!(littlewood_richardson, "../examples/littlewood_richardson.rs");
example!(one_wtype_module, "../examples/one_wtype_module.rs");
example!(central_characters, "../examples/central_characters.rs");
example!(verify_tables, "../examples/verify_tables.rs");
example!(command_line, "../examples/command_line.rs");
