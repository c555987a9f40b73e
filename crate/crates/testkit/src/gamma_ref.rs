//! Frozen reference values of the gamma function on [0.05, 10],
//! spacing 0.05, computed with 50-digit arithmetic at the exact binary64
//! arguments k/20. Used by accuracy sweeps that need an independent
//! reference away from the library's own expansion.

/// (x, gamma(x)) pairs, x = k/20 for k = 1..=200.
pub const GAMMA_REFERENCE: &[(f64, f64)] = &[
    (0.05, 19.470085311255513), (0.1, 9.51350769866873),
    (0.15, 6.220272874049878), (0.2, 4.590843711998803),
    (0.25, 3.625609908221908), (0.3, 2.991568987687591),
    (0.35, 2.546146977212288), (0.4, 2.218159543757688),
    (0.45, 1.9681364006023823), (0.5, 1.772453850905516),
    (0.55, 1.616124268733575), (0.6, 1.489192248812817),
    (0.65, 1.38479510202651), (0.7, 1.298055332647558),
    (0.75, 1.2254167024651776), (0.8, 1.1642297137253033),
    (0.85, 1.1124837369484653), (0.9, 1.0686287021193193),
    (0.95, 1.0314533171290323), (1.0, 1.0),
    (1.05, 0.9735042655627756), (1.1, 0.9513507698668732),
    (1.15, 0.9330409311074817), (1.2, 0.9181687423997607),
    (1.25, 0.906402477055477), (1.3, 0.8974706963062772),
    (1.35, 0.8911514420243009), (1.4, 0.8872638175030753),
    (1.45, 0.8856613802710721), (1.5, 0.886226925452758),
    (1.55, 0.8888683478034664), (1.6, 0.8935153492876903),
    (1.65, 0.9001168163172315), (1.7, 0.9086387328532904),
    (1.75, 0.9190625268488832), (1.8, 0.9313837709802427),
    (1.85, 0.9456111764061955), (1.9, 0.9617658319073874),
    (1.95, 0.9798806512725806), (2.0, 1.0),
    (2.05, 1.0221794788409144), (2.1, 1.0464858468535605),
    (2.15, 1.0729970707736038), (2.2, 1.1018024908797128),
    (2.25, 1.1330030963193463), (2.3, 1.1667119051981603),
    (2.35, 1.2030544467328061), (2.4, 1.2421693445043054),
    (2.45, 1.2842090013930547), (2.5, 1.329340388179137),
    (2.55, 1.3777459390953726), (2.6, 1.4296245588603045),
    (2.65, 1.4851927469234318), (2.7, 1.5446858458505939),
    (2.75, 1.6083594219855457), (2.8, 1.6764907877644366),
    (2.85, 1.7493806763514617), (2.9, 1.827355080624036),
    (2.95, 1.9107672699815323), (3.0, 2.0),
    (3.05, 2.0954679316238742), (3.1, 2.197620278392477),
    (3.15, 2.306943702163248), (3.2, 2.4239654799353683),
    (3.25, 2.5492569667185294), (3.3, 2.6834373819557684),
    (3.35, 2.8271779498220946), (3.4, 2.9812064268103327),
    (3.45, 3.1463120534129843), (3.5, 3.3233509704478426),
    (3.55, 3.5132521446932), (3.6, 3.717023853036792),
    (3.65, 3.935760779347094), (3.7, 4.170651783796604),
    (3.75, 4.422988410460251), (3.8, 4.694174205740422),
    (3.85, 4.9857349276016665), (3.9, 5.299329733809704),
    (3.95, 5.636763446445521), (4.0, 6.0),
    (4.05, 6.391177191452816), (4.1, 6.812622863016676),
    (4.15, 7.266872661814236), (4.2, 7.756689535793179),
    (4.25, 8.28508514183522), (4.3, 8.855343360454034),
    (4.35, 9.47104613190401), (4.4, 10.136101851155138),
    (4.45, 10.854776584274797), (4.5, 11.631728396567448),
    (4.55, 12.47204511366086), (4.6, 13.381285870932443),
    (4.65, 14.365526844616904), (4.7, 15.431411600047436),
    (4.75, 16.58620653922594), (4.8, 17.837861981813603),
    (4.85, 19.195079471266403), (4.9, 20.66738596185786),
    (4.95, 22.26521561345981), (5.0, 24.0),
    (5.05, 25.884267625383902), (5.1, 27.931753738368368),
    (5.15, 30.157521546529082), (5.2, 32.578096050331354),
    (5.25, 35.211611852799685), (5.3, 38.077976449952345),
    (5.35, 41.199050673782445), (5.4, 44.598848145082606),
    (5.45, 48.30375580002284), (5.5, 52.34277778455352),
    (5.55, 56.747805267156906), (5.6, 61.55391500628923),
    (5.65, 66.7996998274686), (5.7, 72.52763452022295),
    (5.75, 78.78448106132322), (5.8, 85.6217375127053),
    (5.85, 93.09613543564204), (5.9, 101.27019121310352),
    (5.95, 110.21281728662606), (6.0, 120.0),
    (6.05, 130.7155515081887), (6.1, 142.45194406567867),
    (6.15, 155.31123596462479), (6.2, 169.40609946172304),
    (6.25, 184.86096222719834), (6.3, 201.81327518474745),
    (6.35, 220.41492110473607), (6.4, 240.83377998344608),
    (6.45, 263.2554691101245), (6.5, 287.88527781504433),
    (6.55, 314.9503192327208), (6.6, 344.7019240352197),
    (6.65, 377.41830402519764), (6.7, 413.4075167652708),
    (6.75, 453.0107661026085), (6.8, 496.6060775736907),
    (6.85, 544.6123922985059), (6.9, 597.4941281573108),
    (6.95, 655.7662628554251), (7.0, 720.0),
    (7.05, 790.8290866245417), (7.1, 868.9568588006398),
    (7.15, 955.1641011824424), (7.2, 1050.3178166626828),
    (7.25, 1155.3810139199898), (7.3, 1271.4236336639087),
    (7.35, 1399.634749015074), (7.4, 1541.336191894055),
    (7.45, 1697.997775760303), (7.5, 1871.2543057977884),
    (7.55, 2062.9245909743213), (7.6, 2275.03269863245),
    (7.65, 2509.8317217675644), (7.7, 2769.8303623273146),
    (7.75, 3057.8226711926072), (7.8, 3376.9213275010966),
    (7.85, 3730.5948872447652), (7.9, 4122.709484285445),
    (7.95, 4557.575526845204), (8.0, 5040.0),
    (8.05, 5575.345060703029), (8.1, 6169.593697484543),
    (8.15, 6829.423323454464), (8.2, 7562.288279971303),
    (8.25, 8376.512350919926), (8.3, 9281.39252574655),
    (8.35, 10287.315405260793), (8.4, 11405.887820016009),
    (8.45, 12650.083429414235), (8.5, 14034.407293483413),
    (8.55, 15575.080661856155), (8.6, 17290.248509606616),
    (8.65, 19200.21267152187), (8.7, 21327.693789920282),
    (8.75, 23698.125701742705), (8.8, 26339.9863545086),
    (8.85, 29285.16986487141), (8.9, 32569.404925855015),
    (8.95, 36232.72543841931), (9.0, 40320.0),
    (9.05, 44881.52773865939), (9.1, 49973.70894962479),
    (9.15, 55659.80008615388), (9.2, 62010.763895764685),
    (9.25, 69106.22689508938), (9.3, 77035.55796369638),
    (9.35, 85899.08363392761), (9.4, 95809.45768813447),
    (9.45, 106893.20497855027), (9.5, 119292.46199460901),
    (9.55, 133166.93965887013), (9.6, 148696.1371826169),
    (9.65, 166081.83960866416), (9.7, 185550.93597230644),
    (9.75, 207358.59989024868), (9.8, 231791.87991967573),
    (9.85, 259173.75330411195), (9.9, 289867.70384010964),
    (9.95, 324282.8926738528), (10.0, 362880.0),
];
