pub const LN_GAMMA_TABLE: &[(f64, f64)] = &[
    (0.001, 6.907178885383853),
    (0.0017782794100389228, 6.331085153620187),
    (0.0031622776601683794, 5.754645628309431),
    (0.005623413251903491, 5.177596474724968),
    (0.01, 4.599479878042022),
    (0.01778279410038923, 4.019517265805386),
    (0.03162277660168379, 3.436434537897841),
    (0.056234132519034905, 2.8483043543793722),
    (0.1, 2.252712651734206),
    (0.1778279410038923, 1.6482875790112788),
    (0.31622776601683794, 1.040520647486643),
    (0.5623413251903491, 0.45892278847241913),
    (1.0, 0.0),
    (1.7782794100389228, -0.07709930719365306),
    (3.1622776601683795, 0.8479881161762293),
    (5.62341325190349, 4.158150028029237),
    (10.0, 12.801827480081469),
    (17.78279410038923, 32.88471019305621),
    (31.622776601683793, 76.79305925851986),
    (56.23413251903491, 169.26830763930676),
    (100.0, 359.1342053695754),
    (177.82794100389228, 741.7949815820919),
    (316.2277660168379, 1502.1665547261248),
    (562.341325190349, 2996.2182765639145),
    (1000.0, 5905.220423209181),
    (1778.2794100389228, 11526.47677196502),
    (3162.2776601683795, 22319.558681545703),
    (5623.413251903491, 42929.6415753174),
    (10000.0, 82099.71749644238),
    (17782.794100389227, 156235.41743069698),
    (31622.776601683792, 296036.56453255645),
    (56234.13251903491, 558809.7252463464),
    (100000.0, 1051287.7089736569),
    (177827.94100389228, 1971852.755534522),
    (316227.7660168379, 3688544.190929443),
    (562341.3251903491, 6882975.801023626),
    (1000000.0, 12815504.569147611),
];
pub const POLYGAMMA_TABLE: &[(u32, f64, f64)] = &[
    (0, 0.01, -100.56088545786868),
    (0, 0.021544346900318832, -46.95821231179851),
    (0, 0.046415888336127774, -22.04769761347189),
    (0, 0.1, -10.423754940411076),
    (0, 0.21544346900318834, -4.911230317836155),
    (0, 0.46415888336127775, -2.151992458034411),
    (0, 1.0, -0.5772156649015329),
    (0, 2.154434690031882, 0.5178490879557879),
    (0, 4.6415888336127775, 1.423484578150834),
    (0, 10.0, 2.251752589066721),
    (0, 21.54434690031882, 3.046726015573474),
    (0, 46.41588833612777, 3.8268309700946017),
    (0, 100.0, 4.600161852738087),
    (0, 215.44346900318823, 5.370375960544259),
    (0, 464.1588833612773, 6.139149310506881),
    (0, 1000.0, 6.907255195648812),
    (0, 2154.4346900318824, 7.6750515459181825),
    (0, 4641.588833612773, 8.44270428204234),
    (0, 10000.0, 9.210290371142849),
    (0, 21544.346900318822, 9.977845528183826),
    (0, 46415.888336127726, 10.745386328426749),
    (0, 100000.0, 11.512920464961896),
    (0, 215443.46900318822, 12.280451508505363),
    (0, 464158.8833612772, 13.047981116415192),
    (0, 1000000.0, 13.815510057964191),
    (1, 0.01, 10001.621213528313),
    (1, 0.021544346900318832, 2156.0292957381257),
    (1, 0.046415888336127774, 465.69883133694117),
    (1, 0.1, 101.43329915079275),
    (1, 0.21544346900318834, 22.789278895033622),
    (1, 0.46415888336127775, 5.607028526210516),
    (1, 1.0, 1.6449340668482264),
    (1, 2.154434690031882, 0.5879163425068237),
    (1, 4.6415888336127775, 0.2403030905655727),
    (1, 10.0, 0.10516633568168575),
    (1, 21.54434690031882, 0.0475097651773797),
    (1, 46.41588833612777, 0.021778092853997785),
    (1, 100.0, 0.010050166663333571),
    (1, 215.44346900318823, 0.0046523776736577946),
    (1, 464.1588833612773, 0.0021567571511138125),
    (1, 1000.0, 0.0010005001666666333),
    (1, 2154.4346900318824, 0.00046426662176244575),
    (1, 4641.588833612773, 0.00021546667861402336),
    (1, 10000.0, 0.00010000500016666666),
    (1, 21544.346900318822, 4.641696557013951e-05),
    (1, 46415.888336127726, 2.1544578981427213e-05),
    (1, 100000.0, 1.0000050000166667e-05),
    (1, 215443.46900318822, 4.641599605802899e-06),
    (1, 464158.8833612772, 2.1544370108279703e-06),
    (1, 1000000.0, 1.0000005000001667e-06),
    (2, 0.01, -2000002.340398677),
    (2, 0.021544346900318832, -200002.26978457233),
    (2, 0.046415888336127774, -20002.12759692585),
    (2, 0.1, -2001.8614573783436),
    (2, 0.21544346900318834, -201.42911504785275),
    (2, 0.46415888336127775, -20.88161989576741),
    (2, 1.0, -2.4041138063191885),
    (2, 2.154434690031882, -0.33725242121990595),
    (2, 4.6415888336127775, -0.057477155075178775),
    (2, 10.0, -0.011049834970802067),
    (2, 21.54434690031882, -0.002256753821358909),
    (2, 46.41588833612777, -0.0004742665884368427),
    (2, 100.0, -0.00010100499983335),
    (2, 215.44346900318823, -2.1644578978093917e-05),
    (2, 464.1588833612773, -4.651599605769575e-06),
    (2, 1000.0, -1.0010004999998333e-06),
    (2, 2154.4346900318824, -2.1554349221113114e-07),
    (2, 4641.588833612773, -4.642588941334524e-08),
    (2, 10000.0, -1.000100005e-08),
    (2, 21544.346900318822, -2.154534692352681e-09),
    (2, 46415.888336127726, -4.641688834690009e-10),
    (2, 100000.0, -1.00001000005e-10),
    (2, 215443.46900318822, -2.1544446900550946e-11),
    (2, 464158.8833612772, -4.641598833623564e-12),
    (2, 1000000.0, -1.0000010000005e-12),
    (3, 0.01, 600000006.2510618),
    (3, 0.021544346900318832, 27849538.986624174),
    (3, 0.046415888336127774, 1292666.2731590488),
    (3, 0.1, 60004.51287679026),
    (3, 0.21544346900318834, 2788.0453918372314),
    (3, 0.46415888336127775, 130.8071793639822),
    (3, 1.0, 6.493939402266829),
    (3, 2.154434690031882, 0.3786307406928397),
    (3, 4.6415888336127775, 0.027371289483700594),
    (3, 10.0, 0.0023199013042898686),
    (3, 21.54434690031882, 0.00021435519060687783),
    (3, 46.41588833612777, 2.0655611431574067e-05),
    (3, 100.0, 2.030199990001333e-06),
    (3, 215.44346900318823, 2.0139678547304974e-07),
    (3, 464.1588833612773, 2.0064725872262267e-08),
    (3, 1000.0, 2.003001999999e-09),
    (3, 2154.4346900318824, 2.001392907536979e-10),
    (3, 4641.588833612773, 2.000646423238792e-11),
    (3, 10000.0, 2.00030002e-12),
    (3, 21544.346900318822, 2.0001392519738819e-13),
    (3, 46415.888336127726, 2.0000646339690268e-14),
    (3, 100000.0, 2.0000300002e-15),
    (3, 215443.46900318822, 2.0000139248095938e-16),
    (3, 464158.8833612772, 2.000006463313362e-17),
    (3, 1000000.0, 2.000003000002e-18),
    (4, 0.01, -240000000023.7009),
    (4, 0.021544346900318832, -5170643278.493041),
    (4, 0.046415888336127774, -111398151.93140519),
    (4, 0.1, -2400015.6072031953),
    (4, 0.21544346900318834, -51716.02948737604),
    (4, 0.46415888336127775, -1117.883417100889),
    (4, 1.0, -24.88626612344088),
    (4, 2.154434690031882, -0.6256188391027385),
    (4, 4.6415888336127775, -0.019466327846504577),
    (4, 10.0, -0.0007299311682352867),
    (4, 21.54434690031882, -3.0534704373005075e-05),
    (4, 46.41588833612777, -1.34935955536947e-06),
    (4, 100.0, -6.120999930011997e-08),
    (4, 215.44346900318823, -2.8109065149400088e-09),
    (4, 464.1588833612773, -1.2982407205869815e-10),
    (4, 1000.0, -6.0120099999930004e-12),
    (4, 2154.4346900318824, -2.787539621795562e-13),
    (4, 4641.588833612773, -1.2932179046791673e-14),
    (4, 10000.0, -6.0012001e-16),
    (4, 21544.346900318822, -2.785211842330479e-17),
    (4, 46415.888336127726, -1.2927165140851406e-18),
    (4, 100000.0, -6.000120001e-20),
    (4, 215443.46900318822, -2.7849791534839557e-21),
    (4, 464158.8833612772, -1.292666383935738e-22),
    (4, 1000000.0, -6.00001200001e-24),
    (5, 0.01, 120000000000115.05),
    (5, 0.021544346900318832, 1200000000107.5515),
    (5, 0.046415888336127774, 12000000093.224932),
    (5, 0.1, 120000069.30751093),
    (5, 0.21544346900318834, 1200038.374284343),
    (5, 0.46415888336127775, 12012.808318529396),
    (5, 1.0, 122.0811674381339),
    (5, 2.154434690031882, 1.35553802354222),
    (5, 4.6415888336127775, 0.01838133444523139),
    (5, 10.0, 0.0003059451621172682),
    (5, 21.54434690031882, 5.798437045790279e-06),
    (5, 46.41588833612777, 1.1752734214372276e-07),
    (5, 100.0, 2.460599944011996e-09),
    (5, 215.44346900318823, 5.2309217458068136e-11),
    (5, 464.1588833612773, 1.119994246619215e-12),
    (5, 1000.0, 2.4060059999944e-14),
    (5, 2154.4346900318824, 5.176646041029278e-16),
    (5, 4641.588833612773, 1.1145814493331501e-17),
    (5, 10000.0, 2.4006000599999993e-19),
    (5, 21544.346900318822, 5.1712432839260725e-21),
    (5, 46415.888336127726, 1.1140413213597353e-22),
    (5, 100000.0, 2.4000600006e-24),
    (5, 215443.46900318822, 5.170703256355035e-26),
    (5, 464158.8833612772, 1.1139873200800014e-27),
    (5, 1000000.0, 2.400006000006e-29),
    (6, 0.01, -7.2000000000000664e+16),
    (6, 0.021544346900318832, -334194396020746.4),
    (6, 0.046415888336127774, -1551192977352.1846),
    (6, 0.1, -7200000373.781803),
    (6, 0.21544346900318834, -33419626.327596545),
    (6, 0.46415888336127775, -155170.6641016348),
    (6, 1.0, -726.0114797149845),
    (6, 2.154434690031882, -3.6182606883555515),
    (6, 4.6415888336127775, -0.02160811101885328),
    (6, 10.0, -0.0001601508710767886),
    (6, 21.54434690031882, -1.3761225610038627e-06),
    (6, 46.41588833612777, -1.2795080316338007e-08),
    (6, 100.0, -1.2364199496131948e-10),
    (6, 215.44346900318823, -1.2168002037187635e-12),
    (6, 464.1588833612773, -1.2077754594486433e-14),
    (6, 1000.0, -1.20360419999496e-16),
    (6, 2154.4346900318824, -1.2016718768424409e-18),
    (6, 4641.588833612773, -1.2007757914351411e-20),
    (6, 10000.0, -1.2003600419999996e-22),
    (6, 21544.346900318822, -1.2001671062466408e-24),
    (6, 46415.888336127726, -1.2000775615983183e-26),
    (6, 100000.0, -1.20003600042e-28),
    (6, 215443.46900318822, -1.2000167098102924e-30),
    (6, 464158.8833612772, -1.200007755984389e-32),
    (6, 1000000.0, -1.2000036000042e-34),
];
pub const GAMMA_RATIO_10_HALF: f64 = 3.1230114333906127;
pub const J_1118_35: f64 = 0.19833126202896767;
