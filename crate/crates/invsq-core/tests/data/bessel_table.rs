pub const JY_TABLE: &[(f64, f64, f64, f64)] = &[
    (0.0, 0.001, 0.9999997500000156, -4.471416611375923),
    (0.0, 0.1, 0.99750156206604, -1.5342386513503667),
    (0.0, 1.0, 0.7651976865579666, 0.08825696421567696),
    (0.0, 1.99, 0.22966118404558944, 0.5092771201920098),
    (0.0, 2.01, 0.2181268213258489, 0.5114178360472612),
    (0.0, 5.0, -0.1775967713143383, -0.30851762524903376),
    (0.0, 11.9, 0.025049441699589645, -0.22983321394337505),
    (0.0, 12.1, 0.06966677360680731, -0.2184383805509255),
    (0.0, 20.0, 0.16702466434058316, 0.06264059680938383),
    (0.0, 30.0, -0.08636798358104021, -0.11729573168666403),
    (0.0, 50.0, 0.055812327669251816, -0.09806499547007708),
    (0.0, 75.0, 0.03464391380509706, -0.08536904764777561),
    (0.0, 90.0, 0.026630016699969512, 0.07977647585487777),
    (0.0, 120.0, 0.07182341582915613, -0.012104365410016202),
    (0.0, 150.0, -0.0007740903753942912, -0.06514222150903735),
    (0.0, 200.0, -0.015437439930565091, -0.05426577524981791),
    (0.0, 1000.0, 0.024786686152420176, 0.0047159179776228135),
    (0.3, 0.001, 0.11393853750601629, -9.229540995584866),
    (0.3, 0.1, 0.4527257459945966, -2.0018779347994435),
    (0.3, 1.0, 0.7402224792810205, -0.24570419535649946),
    (0.3, 1.99, 0.4304138607217115, 0.3600167844864646),
    (0.3, 2.01, 0.4209562959350253, 0.3668961025637201),
    (0.3, 5.0, -0.29682911012576074, -0.19705687911614495),
    (0.3, 11.9, -0.08122067438924163, -0.21649659014082592),
    (0.3, 12.1, -0.03626220417231409, -0.22642839071918258),
    (0.3, 20.0, 0.17731275838228064, -0.019617176049764748),
    (0.3, 30.0, -0.13011079142417548, -0.06549777194112158),
    (0.3, 50.0, 0.005310039107847735, -0.11271109864982047),
    (0.3, 75.0, -0.007833743084473866, -0.09179746953821123),
    (0.3, 90.0, 0.05991594581813614, 0.05902171307863005),
    (0.3, 120.0, 0.05851622397701062, -0.04337034506871152),
    (0.3, 150.0, -0.030246391350782192, -0.05769984867292979),
    (0.3, 200.0, -0.03838172475119409, -0.041351368792599305),
    (0.3, 1000.0, 0.02422639884988775, -0.007049916326045269),
    (0.5, 0.001, 0.02523132101498094, -25.23131260454004),
    (0.5, 0.1, 0.25189294032600096, -2.5105273689585093),
    (0.5, 1.0, 0.6713967071418031, -0.4310988680183761),
    (0.5, 1.99, 0.5166315012173879, 0.23022016701499365),
    (0.5, 2.01, 0.5093708287403711, 0.23930652673421182),
    (0.5, 5.0, -0.3421679847981618, -0.1012177091851084),
    (0.5, 11.9, -0.14297213406708068, -0.18181426991060595),
    (0.5, 12.1, -0.10313819465555996, -0.20487976261966703),
    (0.5, 20.0, 0.16288076385502986, -0.07280690478506185),
    (0.5, 30.0, -0.1439296533703999, -0.022470290598831023),
    (0.5, 50.0, -0.029605831888924614, -0.10888475635053954),
    (0.5, 75.0, -0.03572700968170258, -0.08492257892204688),
    (0.5, 90.0, 0.07518906855026948, 0.037684970437156205),
    (0.5, 120.0, 0.0422897225396915, -0.05930214277111539),
    (0.5, 150.0, -0.04657205589560011, -0.04555409339939689),
    (0.5, 200.0, -0.04927052384285448, -0.02748662114718023),
    (0.5, 1000.0, 0.020863266605093828, -0.014189569370927295),
    (1.0, 0.001, 0.0004999999375000026, -636.6221672311394),
    (1.0, 0.1, 0.049937526036242, -6.4589510947020266),
    (1.0, 1.0, 0.4400505857449335, -0.7812128213002887),
    (1.0, 1.99, 0.5773494940468116, -0.1126814084217741),
    (1.0, 2.01, 0.5760600909547547, -0.101403622101718),
    (1.0, 5.0, -0.32757913759146523, 0.14786314339122683),
    (1.0, 11.9, -0.22898324966192404, -0.03471149833403061),
    (1.0, 12.1, -0.2157489733769248, -0.07873693145139575),
    (1.0, 20.0, 0.06683312417585005, -0.1655116143625213),
    (1.0, 30.0, -0.11875106261662294, 0.08442557066174723),
    (1.0, 50.0, -0.09751182812517514, -0.05679566856201477),
    (1.0, 75.0, -0.08513999504482911, -0.035213785160580484),
    (1.0, 90.0, 0.07992564670886808, -0.02618723860776823),
    (1.0, 120.0, -0.01180521143300189, -0.07187447320914954),
    (1.0, 150.0, -0.06514516365772736, 0.00055695634956084),
    (1.0, 200.0, -0.05430453818237822, 0.01530182458038999),
    (1.0, 1000.0, 0.004728311907089524, -0.024784331292351778),
    (1.118033988749895, 0.001, 0.00019308963868032962, -1474.4731660833527),
    (1.118033988749895, 0.1, 0.033213472698689225, -8.657520766227238),
    (1.118033988749895, 1.0, 0.386892527716496, -0.851843676437465),
    (1.118033988749895, 1.99, 0.5661675122909238, -0.18762312273182324),
    (1.118033988749895, 2.01, 0.5660954277551019, -0.17635528488814642),
    (1.118033988749895, 5.0, -0.30042155654654334, 0.19887317142195873),
    (1.118033988749895, 11.9, -0.23163160089847665, 0.0056726256515533605),
    (1.118033988749895, 12.1, -0.2262626992689817, -0.03996469825781866),
    (1.118033988749895, 20.0, 0.03627385117299702, -0.17479963166587825),
    (1.118033988749895, 30.0, -0.10159518022460792, 0.10445505210241988),
    (1.118033988749895, 50.0, -0.10621842329453968, -0.03811282876654175),
    (1.118033988749895, 75.0, -0.09014170711331841, -0.019065431599101786),
    (1.118033988749895, 90.0, 0.07378499062066855, -0.040370345354990955),
    (1.118033988749895, 120.0, -0.024781499401779317, -0.0684925269985578),
    (1.118033988749895, 150.0, -0.06393660214047828, 0.01250348085179463),
    (1.118033988749895, 200.0, -0.05056870683869488, 0.025018883637961384),
    (1.118033988749895, 1000.0, 8.151317870176102e-05, -0.02523119985809091),
    (2.0, 0.001, 1.2499998958333365e-07, -1273239.8630456675),
    (2.0, 0.1, 0.001248958658799919, -127.64478324269015),
    (2.0, 1.0, 0.11490348493190047, -1.6506826068162543),
    (2.0, 1.99, 0.3505895637401508, -0.6225247668470592),
    (2.0, 2.01, 0.35506729902714096, -0.6123169625166324),
    (2.0, 5.0, 0.046565116277752214, 0.36766288260552454),
    (2.0, 11.9, -0.06353402147470293, 0.22399934867715143),
    (2.0, 12.1, -0.10532776094183621, 0.20542401171598404),
    (2.0, 20.0, -0.16034135192299814, -0.07919175824563596),
    (2.0, 30.0, 0.07845124607326535, 0.12292410306411385),
    (2.0, 50.0, -0.05971280079425882, 0.0957931687275965),
    (2.0, 75.0, -0.036914313672959165, 0.08443001337682679),
    (2.0, 90.0, -0.02485389121755022, -0.08035841449060595),
    (2.0, 120.0, -0.0720201693530395, 0.010906457523197044),
    (2.0, 150.0, -9.451180670874022e-05, 0.06514964759369817),
    (2.0, 200.0, 0.01489439454874131, 0.05441879349562181),
    (2.0, 1000.0, -0.024777229528605997, -0.0047654866402075165),
    (2.7, 0.001, 2.930994821558096e-10, -402227117.36897296),
    (2.7, 0.1, 7.357353398361119e-05, -1603.6538527681428),
    (2.7, 1.0, 0.03447121017399907, -3.751593896991658),
    (2.7, 1.99, 0.1795476626547013, -0.938016789786242),
    (2.7, 2.01, 0.18340406480439667, -0.9227048114983228),
    (2.7, 5.0, 0.29977887486530136, 0.24119815767237196),
    (2.7, 11.9, 0.14811428511355165, 0.18145278159074418),
    (2.7, 12.1, 0.10916646849346404, 0.20492355371222323),
    (2.7, 20.0, -0.15197566349407768, 0.09495868450844651),
    (2.7, 30.0, 0.14583053226899095, -0.006120474764258546),
    (2.7, 50.0, 0.055048747482625476, 0.09858998517122244),
    (2.7, 75.0, 0.056901098803075076, 0.07249719941749334),
    (2.7, 90.0, -0.08261580267762729, -0.015851105576237853),
    (2.7, 120.0, -0.023925497813309486, 0.06880430569815534),
    (2.7, 150.0, 0.05767918682817322, 0.030296985081358044),
    (2.7, 200.0, 0.055154629461970514, 0.011888896076663547),
    (2.7, 1000.0, -0.015527455501783066, 0.019887688124007714),
    (5.0, 0.001, 2.6041665581597246e-19, -2.4446200786802637e+17),
    (5.0, 0.1, 2.6030817909644417e-09, -24461484.50230391),
    (5.0, 1.0, 0.00024975773021123444, -260.4058666258122),
    (5.0, 1.99, 0.0068770959904026745, -10.159925679053364),
    (5.0, 2.01, 0.007205039500029675, -9.718373378362164),
    (5.0, 5.0, 0.26114054612017007, -0.4536948224911019),
    (5.0, 11.9, -0.0945381715083847, -0.2233058626638331),
    (5.0, 12.1, -0.05197446976659682, -0.23438595207648688),
    (5.0, 20.0, 0.15116976798239498, -0.10003576788953243),
    (5.0, 30.0, -0.14324029551207706, 0.03162735928926443),
    (5.0, 50.0, -0.08140024769656964, -0.07854841391308165),
    (5.0, 75.0, -0.07852397701375137, -0.0483836712969701),
    (5.0, 90.0, 0.08275931952841514, -0.01533876406223975),
    (5.0, 120.0, -0.004571846033960496, -0.07272432555549171),
    (5.0, 150.0, -0.06499863174072584, -0.004652497340417635),
    (5.0, 200.0, -0.055132678944014676, 0.012019640832200107),
    (5.0, 1000.0, 0.0050254069452331865, -0.02472595671974069),
    (10.5, 0.001, 1.8350974424544587e-42, -1.6519682657175249e+40),
    (10.5, 0.1, 1.8346985880035505e-21, -1.6524030146619765e+19),
    (10.5, 1.0, 5.678187477634622e-11, -536349976.62759936),
    (10.5, 1.99, 7.313050156096448e-08, -422266.21037488355),
    (10.5, 2.01, 8.10847598482333e-08, -380987.7292688202),
    (10.5, 5.0, 0.0007267526897414871, -47.557816554170024),
    (10.5, 11.9, 0.29207435036407003, -0.13116508547911288),
    (10.5, 12.1, 0.2966155283848767, -0.09693283582820642),
    (10.5, 20.0, 0.14161199228473081, -0.13146643437549413),
    (10.5, 30.0, -0.06349736950254554, 0.136435660886098),
    (10.5, 50.0, -0.08484972094355338, 0.07630487814534201),
    (10.5, 75.0, -0.030548789649822376, 0.0874027761827967),
    (10.5, 90.0, -0.04004594805167565, -0.07428587258864464),
    (10.5, 120.0, -0.06429617562632119, 0.03451874881716709),
    (10.5, 150.0, 0.027169788424993655, 0.05929878961609685),
    (10.5, 200.0, 0.039980424748481874, 0.03986289179034925),
    (10.5, 1000.0, -0.021612352348443217, 0.01302155963232475),
    (20.0, 0.001, 3.919904302959265e-85, -4.060174203007617e+82),
    (20.0, 0.1, 3.919437720858622e-45, -4.060708420126368e+42),
    (20.0, 1.0, 3.8735030085246576e-25, -4.113970314835505e+22),
    (20.0, 1.99, 3.5468318582048037e-19, -4.509678920936779e+16),
    (20.0, 2.01, 4.3279846133621722e-19, -3.6961066923247624e+16),
    (20.0, 5.0, 2.7703300521289416e-11, -593396529.6914321),
    (20.0, 11.9, 0.00021920024856698157, -90.5082480422221),
    (20.0, 12.1, 0.00028741226412148116, -69.6914978562179),
    (20.0, 20.0, 0.16474777377532654, -0.28548945860020347),
    (20.0, 30.0, 0.0048310199934040645, -0.16848153948742678),
    (20.0, 50.0, -0.11670435275957974, 0.01644263394811578),
    (20.0, 75.0, 0.006896104722152191, 0.09359119826506371),
    (20.0, 90.0, -0.08034534404442249, -0.028274110097231544),
    (20.0, 120.0, 0.0049302157286156235, 0.07318507774361216),
    (20.0, 150.0, 0.06344724095386198, -0.016024629052560344),
    (20.0, 200.0, 0.03745093871086004, -0.042385742893228676),
    (20.0, 1000.0, 0.023357967932679333, 0.009547376014987301),
    (35.2, 0.001, 3.014524102813798e-157, -2.999775151596575e+154),
    (35.2, 0.1, 7.571619323181686e-87, -1.194319290115939e+84),
    (35.2, 1.0, 1.1918434494926858e-51, -7.590383466986548e+48),
    (35.2, 1.99, 3.8633607997207957e-41, -2.344433389219299e+38),
    (35.2, 2.01, 5.490325341310224e-41, -1.6497539004883154e+38),
    (35.2, 5.0, 4.05327504429428e-27, -2.2538828363393238e+24),
    (35.2, 11.9, 3.2207870084032285e-14, -298352327341.2293),
    (35.2, 12.1, 5.596946913616835e-14, -172065399744.98276),
    (35.2, 20.0, 4.229103174220039e-07, -25996.19102380997),
    (35.2, 30.0, 0.011937767855196839, -1.4783481005898),
    (35.2, 50.0, 0.10798204598199833, 0.07904091795742009),
    (35.2, 75.0, -0.05849373879386319, 0.07867902955267778),
    (35.2, 90.0, -0.08753161553511932, -0.004865922398063663),
    (35.2, 120.0, 0.074491095054619, 0.0005178167456527232),
    (35.2, 150.0, -0.05130946520643563, -0.041633562563246955),
    (35.2, 200.0, -0.04603893285315321, 0.033376317970498656),
    (35.2, 1000.0, -0.011954673118503314, 0.02222836584737687),
    (60.0, 0.001, 1.0423784133801967e-280, -5.0894806553633745e+277),
    (60.0, 0.1, 1.0423356980865762e-160, -5.089696294404653e+157),
    (60.0, 1.0, 1.0381149765645214e-100, -5.111092775306671e+97),
    (60.0, 1.99, 8.753072156811072e-83, -6.064254712635558e+79),
    (60.0, 2.01, 1.5943987307870254e-82, -3.329245606117379e+79),
    (60.0, 5.0, 8.160024038093518e-59, -6.524107293782372e+55),
    (60.0, 11.9, 1.9842558248712397e-36, -2.7278355427228924e+33),
    (60.0, 12.1, 5.2878096353440275e-36, -1.024334344753974e+33),
    (60.0, 20.0, 2.2809263887335598e-23, -2.467025758351308e+20),
    (60.0, 30.0, 9.807557643128625e-14, -62466251044.728676),
    (60.0, 50.0, 0.0010485195995314181, -9.194397418995578),
    (60.0, 75.0, 0.09169364023890723, -0.07560583407419996),
    (60.0, 90.0, -0.09670236662667504, -0.011681633305787132),
    (60.0, 120.0, -0.06725905609891956, 0.0400230450039234),
    (60.0, 150.0, -0.02714590368578734, -0.06239996960426746),
    (60.0, 200.0, 0.03415650000127193, 0.04658442831621247),
    (60.0, 1000.0, -0.010245851850792055, 0.023082270887938173),
];
