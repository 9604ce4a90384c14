macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(group_enumeration);
example!(twisted_cubic);
example!(toric_mld);
example!(quotient_formula);
example!(groebner_dimension);
example!(jet_schemes);
example!(hyperquotient_pia);
example!(acc_sampling);
example!(reid_tai);
