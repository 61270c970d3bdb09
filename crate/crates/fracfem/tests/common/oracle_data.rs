// Machine-generated reference values for the test suite; do not edit.
#![allow(clippy::excessive_precision)]

/// One convergence-table row: the five dyadic levels 3..=7 of a single
/// (alpha, t) run, pinned from this implementation (`pin_*`) alongside
/// the published table values (`published_*`).
pub struct TableRow {
    pub alpha: f64,
    pub t: f64,
    pub pin_l2: [f64; 5],
    pub pin_h1: [f64; 5],
    pub pin_gh: Option<[f64; 5]>,
    pub published_l2: [f64; 5],
    pub published_h1: [f64; 5],
    pub published_gh: Option<[f64; 5]>,
}
pub const T1: [TableRow; 3] = [
    TableRow {
        alpha: 0.1,
        t: 1.0,
        pin_l2: [0.0005179901689747547, 0.00012752698055289093, 3.1760218380146046e-05, 7.932485329196361e-06, 1.9826486644160395e-06],
        pin_h1: [0.026855379769246915, 0.013389634110262226, 0.006690042692090527, 0.003344423990647908, 0.0016721373082683579],
        pin_gh: None,
        published_l2: [0.000523, 0.000129, 3.21e-05, 8.01e-06, 2e-06],
        published_h1: [0.0265, 0.0133, 0.00669, 0.00334, 0.00167],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 1.0,
        pin_l2: [0.00033322291183986966, 8.212596604226656e-05, 2.0458860889710074e-05, 5.110193393145975e-06, 1.277266010003923e-06],
        pin_h1: [0.017626963751395327, 0.00878162275819034, 0.004386812410021151, 0.0021929058128376034, 0.0010963903410917885],
        pin_gh: Some([0.0032331893994132946, 0.0008090422892254161, 0.00020228812605870532, 5.05731996791131e-05, 1.2643356030073908e-05]),
        published_l2: [0.000337, 8.31e-05, 2.07e-05, 5.17e-06, 1.3e-06],
        published_h1: [0.0174, 0.00877, 0.00439, 0.00219, 0.0011],
        published_gh: Some([0.0032, 0.000807, 0.000203, 5.17e-05, 1.39e-05]),
    },
    TableRow {
        alpha: 0.95,
        t: 1.0,
        pin_l2: [4.829098735898332e-05, 1.1961362231341115e-05, 2.983494198799437e-06, 7.454474565825963e-07, 1.863352615395505e-07],
        pin_h1: [0.002064522498058113, 0.0010237640135964522, 0.0005108236544140168, 0.0002552796508201959, 0.00012762330702966774],
        pin_gh: None,
        published_l2: [4.84e-05, 1.21e-05, 3.05e-06, 7.93e-07, 2.32e-07],
        published_h1: [0.00204, 0.00102, 0.000511, 0.000255, 0.000128],
        published_gh: None,
    },
];

pub const T2: [TableRow; 1] = [
    TableRow {
        alpha: 0.5,
        t: 1.0,
        pin_l2: [0.0008046585016877919, 0.00019919774744933685, 4.9675665163086416e-05, 1.2411167259657097e-05, 3.102307292711143e-06],
        pin_h1: [0.01803613954514994, 0.00883383945122695, 0.004393575815199848, 0.002193859812291543, 0.001096563577039412],
        pin_gh: None,
        published_l2: [0.000808, 0.0002, 5e-05, 1.26e-05, 3.24e-06],
        published_h1: [0.018, 0.00884, 0.00439, 0.00219, 0.0011],
        published_gh: None,
    },
];

pub const T3: [TableRow; 3] = [
    TableRow {
        alpha: 0.5,
        t: 0.005,
        pin_l2: [0.010594059212476074, 0.0026590031194254054, 0.0006653935106064555, 0.00016638834185557207, 4.159957997563864e-05],
        pin_h1: [0.20964800401026606, 0.10490096672766211, 0.05245981621314646, 0.026231065910884137, 0.013115677248283494],
        pin_gh: None,
        published_l2: [0.0106, 0.00265, 0.000663, 0.000165, 4.02e-05],
        published_h1: [0.208, 0.104, 0.0522, 0.0261, 0.013],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 0.01,
        pin_l2: [0.007952991807968142, 0.001993385457865977, 0.0004986615415692746, 0.000124684989500492, 3.1172471148415386e-05],
        pin_h1: [0.16399198420325256, 0.08202145267388358, 0.04101380471964155, 0.02050728402991972, 0.010253689525130463],
        pin_gh: None,
        published_l2: [0.00794, 0.00199, 0.000493, 0.000119, 2.59e-05],
        published_h1: [0.163, 0.0816, 0.0408, 0.0204, 0.0102],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 1.0,
        pin_l2: [0.0008068364133290815, 0.00020171417345593283, 5.042884730068685e-05, 1.2607230616418052e-05, 3.1518088221821676e-06],
        pin_h1: [0.020274712321194478, 0.010137436514565824, 0.005068726957723489, 0.002534365609775984, 0.0012671820415652614],
        pin_gh: None,
        published_l2: [0.000807, 0.000202, 5.03e-05, 1.25e-05, 3.05e-06],
        published_h1: [0.0202, 0.0101, 0.00504, 0.00252, 0.00126],
        published_gh: None,
    },
];

pub const T4: [TableRow; 3] = [
    TableRow {
        alpha: 0.5,
        t: 0.005,
        pin_l2: [0.010814395257322796, 0.0027165985842636867, 0.0006799429786493192, 0.00017003502012185963, 4.2511829905179904e-05],
        pin_h1: [0.22814778771271937, 0.11434850897274267, 0.05720830010027409, 0.02860839724489671, 0.014304729039821204],
        pin_gh: None,
        published_l2: [0.0108, 0.00271, 0.000679, 0.000169, 4.13e-05],
        published_h1: [0.228, 0.0114, 0.0571, 0.0286, 0.0143],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 0.01,
        pin_l2: [0.00797996674884779, 0.002002014615343187, 0.0005009345149060804, 0.00012526042900615932, 3.131678025166418e-05],
        pin_h1: [0.17328254568703697, 0.08680303145801717, 0.04342162840426765, 0.021713325103951735, 0.01085697617267265],
        pin_gh: None,
        published_l2: [0.00798, 0.002, 0.000499, 0.000123, 2.91e-05],
        published_h1: [0.173, 0.0867, 0.0434, 0.0217, 0.0108],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 1.0,
        pin_l2: [0.000804841966278883, 0.00020149502953424825, 5.039151243820389e-05, 1.2598987350442669e-05, 3.149816153381708e-06],
        pin_h1: [0.02026271744009945, 0.010143402197613718, 0.005073203539724497, 0.0025367910823906347, 0.001268417668875464],
        pin_gh: None,
        published_l2: [0.000805, 0.000201, 5.03e-05, 1.25e-05, 3.07e-06],
        published_h1: [0.0202, 0.0101, 0.00507, 0.00253, 0.00127],
        published_gh: None,
    },
];

pub const T5: [TableRow; 3] = [
    TableRow {
        alpha: 0.5,
        t: 0.005,
        pin_l2: [0.008426572282214545, 0.002121863786225041, 0.000531435565202973, 0.0001329195816946663, 3.32336883317257e-05],
        pin_h1: [0.24616981760924572, 0.11529937013228664, 0.05546759975570167, 0.027132912505652477, 0.013408835695850104],
        pin_gh: None,
        published_l2: [0.00854, 0.00216, 0.000545, 0.000131, 3.17e-05],
        published_h1: [0.218, 0.108, 0.0538, 0.0268, 0.0134],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 0.01,
        pin_l2: [0.00645376113792573, 0.0016207059039019488, 0.0004056356126461492, 0.00010143761120470352, 2.5361196698646466e-05],
        pin_h1: [0.18228128669575142, 0.08536507097815298, 0.04114572189514822, 0.02016001231078665, 0.009972960469092799],
        pin_gh: None,
        published_l2: [0.00654, 0.00164, 0.000414, 0.000106, 2.9e-05],
        published_h1: [0.163, 0.0804, 0.04, 0.02, 0.00996],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 1.0,
        pin_l2: [0.0008000028794195975, 0.00020002162184209685, 5.000670833548238e-05, 1.2501758400350915e-05, 3.1254446795632665e-06],
        pin_h1: [0.020065801084578137, 0.009411801011350127, 0.004554639311291837, 0.002238545101589018, 0.0011094474806206656],
        pin_gh: None,
        published_l2: [0.00081, 0.000203, 5.07e-05, 1.27e-05, 3.23e-06],
        published_h1: [0.0182, 0.00902, 0.00446, 0.00222, 0.00111],
        published_gh: None,
    },
];

pub const T6: [TableRow; 3] = [
    TableRow {
        alpha: 0.5,
        t: 0.005,
        pin_l2: [0.00852987279188692, 0.002128389124186173, 0.000531843650046137, 0.00013294508411737445, 3.3235282129136645e-05],
        pin_h1: [0.21173917788365143, 0.10594462710264764, 0.05298132725224348, 0.026491778549497483, 0.013246028387593397],
        pin_gh: None,
        published_l2: [0.0086, 0.00214, 0.00053, 0.000128, 2.85e-05],
        published_h1: [0.178, 0.0978, 0.0511, 0.0261, 0.0132],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 0.01,
        pin_l2: [0.006505684148119789, 0.0016239735367412375, 0.0004058399104351724, 0.00010145037866235902, 2.5361994622450576e-05],
        pin_h1: [0.15773094587920086, 0.07889620656384497, 0.03945181152150478, 0.01972636494674947, 0.009863239814566637],
        pin_gh: None,
        published_l2: [0.00656, 0.00164, 0.000406, 9.94e-05, 2.29e-05],
        published_h1: [0.134, 0.0734, 0.0382, 0.0195, 0.00985],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 1.0,
        pin_l2: [0.0008001858888360768, 0.00020003307499418392, 5.000742415801752e-05, 1.2501803135324922e-05, 3.1254474686496853e-06],
        pin_h1: [0.017592283300271294, 0.008796224535709891, 0.004398122009941539, 0.002199062253959386, 0.0010995311856144487],
        pin_gh: None,
        published_l2: [0.000807, 0.000202, 5.04e-05, 1.25e-05, 3.09e-06],
        published_h1: [0.0154, 0.0083, 0.00429, 0.00218, 0.0011],
        published_gh: None,
    },
];

pub const T7: [TableRow; 3] = [
    TableRow {
        alpha: 0.5,
        t: 0.005,
        pin_l2: [0.07232090755184696, 0.02652308611680883, 0.009525969809330091, 0.0033932583985106313, 0.001204121693153407],
        pin_h1: [1.5107588773471803, 1.0727580479645693, 0.758396949761786, 0.5360381638286806, 0.37898581217751465],
        pin_gh: None,
        published_l2: [0.0724, 0.0266, 0.00954, 0.0034, 0.00121],
        published_h1: [1.51, 1.07, 0.76, 0.54, 0.381],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 0.01,
        pin_l2: [0.051904836329326215, 0.018872913118393782, 0.0067559486253930935, 0.0024028975035663915, 0.0008520585746259953],
        pin_h1: [1.069132881166931, 0.7581126036887113, 0.5360598941086465, 0.37895886895489733, 0.26795575204116573],
        pin_gh: None,
        published_l2: [0.052, 0.0189, 0.00677, 0.0024, 0.000854],
        published_h1: [1.07, 0.759, 0.537, 0.38, 0.27],
        published_gh: None,
    },
    TableRow {
        alpha: 0.5,
        t: 1.0,
        pin_l2: [0.005460580231601528, 0.0019322008688280746, 0.0006833918106702113, 0.00024165992132209882, 8.544753476869738e-05],
        pin_h1: [0.10712584935827418, 0.07577816555087825, 0.053586382573059255, 0.03788830884746799, 0.02679283599987587],
        pin_gh: None,
        published_l2: [0.00547, 0.00193, 0.000684, 0.000242, 8.56e-05],
        published_h1: [0.107, 0.0758, 0.0537, 0.038, 0.027],
        published_gh: None,
    },
];

pub const T8_PIN_L2: [f64; 5] = [0.0032432488862168393, 0.000820647512828175, 0.00020527764736610294, 5.083064448786226e-05, 1.218087806918286e-05];
pub const T8_PIN_H1: [f64; 5] = [0.07153632535723242, 0.0359725395533794, 0.017986602740086628, 0.008943551822753408, 0.00436440965906619];
pub const T8_PUBLISHED_L2: [f64; 5] = [0.00324, 0.000821, 0.000205, 5.09e-05, 1.23e-06];
pub const T8_PUBLISHED_H1: [f64; 5] = [0.0715, 0.036, 0.018, 0.00894, 0.00436];
pub const T8_REF_GAP: f64 = 5.208042828891424e-05;
pub const T8_REF_NODAL: [f64; 511] = [0.0019424794299482428, 0.003869933182534135, 0.005782487841357173, 0.007680269557496949, 0.009563404021259027, 0.011432016435085929, 0.013286231487606184, 0.015126173328794536, 0.016951965546216422, 0.018763731142329945, 0.02056159251281875, 0.022345671425929317, 0.02411608900278651, 0.02587296569866128, 0.027616421285164748, 0.02934657483334328, 0.031063544697649177, 0.03276744850076223, 0.034458403119237466, 0.03613652466995486, 0.03780192849734715, 0.039454729161382186, 0.041095040426276694, 0.04272297524991865, 0.04433864577397592, 0.045942163314669174, 0.04753363835418748, 0.0491131805327254, 0.05068089864112082, 0.05223690061407331, 0.05378129352392285, 0.055314183574969616, 0.056835676098315725, 0.05834587554721005, 0.059844885492878225, 0.06133280862081971, 0.06280974672755461, 0.06427580071780334, 0.0657310706020824, 0.06717565549470013, 0.06860965361213665, 0.07003316227179276, 0.07144627789109259, 0.07284909598692554, 0.07424171117541331, 0.07562421717198817, 0.07699670679176895, 0.07835927195022184, 0.07971200366409303, 0.08105499205260121, 0.0823883263388774, 0.08371209485164095, 0.08502638502710017, 0.08633128341106641, 0.08762687566127132, 0.0889132465498766, 0.09019047996616636, 0.09145865891941245, 0.09271786554190295, 0.0939681810921252, 0.09520968595809412, 0.09644245966081749, 0.09766658085788957, 0.09888212734720545, 0.10008917607078814, 0.10128780311872074, 0.10247808373317661, 0.10366009231254049, 0.10483390241561366, 0.10599958676589678, 0.10715721725594375, 0.10830686495178073, 0.10944860009738415, 0.11058249211921233, 0.11170860963078483, 0.1128270204373045, 0.11393779154031672, 0.11504098914240131, 0.11613667865189206, 0.11722492468761926, 0.11830579108367101, 0.1193793408941687, 0.12044563639805271, 0.12150473910387442, 0.12255670975459067, 0.12360160833235688, 0.12463949406331527, 0.125670425422375, 0.12669446013798058, 0.12771165519686578, 0.12872206684878973, 0.1297257506112523, 0.130722761274186, 0.13171315290462202, 0.13269697885132706, 0.13367429174940917, 0.13464514352488982, 0.13560958539924003, 0.13656766789387845, 0.1375194408346289, 0.13846495335613582, 0.13940425390623523, 0.14033739025027966, 0.14126440947541505, 0.14218535799480797, 0.14310028155182156, 0.1440092252241383, 0.1449122334278288, 0.1458093499213641, 0.146700617809571, 0.14758607954752867, 0.14846577694440546, 0.14933975116723427, 0.1502080427446257, 0.1510706915704179, 0.15192773690726158, 0.15277921739013972, 0.1536251710298206, 0.15446563521624324, 0.15530064672183463, 0.15613024170475748, 0.15695445571208802, 0.15777332368292293, 0.15858687995141452, 0.1593951582497334, 0.16019819171095867, 0.1609960128718936, 0.16178865367580783, 0.16257614547510385, 0.1633585190339086, 0.1641358045305887, 0.16490803156018918, 0.1656752291367952, 0.16643742569581607, 0.16719464909619175, 0.16794692662252042, 0.16869428498710773, 0.16943675033193648, 0.17017434823055705, 0.17090710368989798, 0.17163504115199607, 0.17235818449564633, 0.1730765570379711, 0.17379018153590792, 0.17449908018761648, 0.17520327463380372, 0.1759027859589674, 0.17659763469255796, 0.17728784081005777, 0.1779734237339788, 0.1786544023347775, 0.17933079493168716, 0.18000261929346792, 0.1806698926390739, 0.18133263163823768, 0.18199085241197205, 0.18264457053298852, 0.1832938010260334, 0.1839385583681408, 0.18457885648880284, 0.18521470877005716, 0.18584612804649148, 0.18647312660516563, 0.18709571618545104, 0.1877139079787879, 0.1883277126283598, 0.18893714022868652, 0.1895422003251347, 0.1901429019133471, 0.19073925343859024, 0.19133126279502094, 0.19191893732487197, 0.19250228381755732, 0.19308130850869726, 0.19365601707906366, 0.19422641465344606, 0.19479250579943896, 0.19535429452615058, 0.19591178428283415, 0.19646497795744178, 0.19701387787510194, 0.19755848579652088, 0.19809880291630894, 0.1986348298612326, 0.19916656668839283, 0.19969401288333063, 0.2002171673580609, 0.20073602844903535, 0.20125059391503597, 0.20176086093499931, 0.20226682610577346, 0.20276848543980874, 0.20326583436278337, 0.20375886771116536, 0.2042475797297124, 0.20473196406891073, 0.2052120137823552, 0.20568772132407173, 0.2061590785457841, 0.20662607669412714, 0.2070887064078078, 0.20754695771471665, 0.20800082002899153, 0.20845028214803565, 0.20889533224949322, 0.20933595788818374, 0.20977214599299904, 0.21020388286376449, 0.21063115416806785, 0.2110539449380589, 0.2114722395672222, 0.21188602180712718, 0.2122952747641581, 0.2126999808962278, 0.2131001220094788, 0.21349567925497567, 0.21388663312539238, 0.2142729634516993, 0.21465464939985363, 0.21503166946749797, 0.21540400148067165, 0.21577162259054009, 0.21613450927014624, 0.21649263731119064, 0.21684598182084447, 0.21719451721860156, 0.21753821723317585, 0.21787705489944914, 0.21821100255547665, 0.21854003183955625, 0.2188641136873681, 0.21918321832919196, 0.2194973152872094, 0.219806373372898, 0.2201103606845258, 0.22040924460475347, 0.22070299179835298, 0.22099156821005064, 0.22127493906250414, 0.22155306885442183, 0.22182592135883367, 0.22209345962152435, 0.22235564595963703, 0.22261244196045904, 0.22286380848039974, 0.22310970564417082, 0.22335009284418053, 0.22358492874015315, 0.22381417125898534, 0.22403777759485097, 0.22425570420956717, 0.2244679068332337, 0.22467434046515872, 0.22487495937508378, 0.22506971710472184, 0.22525856646962195, 0.22544145956137357, 0.2256183477501669, 0.225789181687721, 0.22595391131059697, 0.22611248584390992, 0.2262648538054545, 0.2264109630102614, 0.22655076057559878, 0.2266841929264353, 0.22681120580138095, 0.22693174425912177, 0.22704575268536561, 0.227153174800315, 0.22725395366668377, 0.2273480316982751, 0.2274353506691377, 0.2275158517233168, 0.2275894753852179, 0.22765616157059998, 0.22771584959821525, 0.22776847820211268, 0.22781398554462262, 0.22785230923003927, 0.22788338631901747, 0.22790715334370107, 0.22792354632359915, 0.22793250078222596, 0.22793395176452078, 0.22792783385506274, 0.22791408119709688, 0.2278926275123846, 0.22786340612189399, 0.227826349967343, 0.2277813916336089, 0.22772846337201622, 0.22766749712451503, 0.22759842454876048, 0.22752117704410357, 0.22743568577850248, 0.22734188171636271, 0.22723969564731325, 0.22712905821592522, 0.22700989995237703, 0.22688215130407077, 0.22674574266820202, 0.22660060442528385, 0.22644666697362495, 0.2262838607647601, 0.22611211633982894, 0.22593136436689867, 0.2257415356792233, 0.22554256131443143, 0.2253343725546311, 0.22511690096742043, 0.22489007844778888, 0.22465383726089289, 0.2244081100856874, 0.22415283005939265, 0.2238879308227728, 0.22361334656620183, 0.22332901207648836, 0.2230348627844304, 0.22273083481306657, 0.22241686502659014, 0.22209289107988797, 0.2217588514686649, 0.22141468558011068, 0.22106033374406606, 0.2206957372846396, 0.22032083857222562, 0.21993558107587166, 0.21953990941593987, 0.2191337694170058, 0.2187171081609346, 0.21828987404007313, 0.21785201681049304, 0.21740348764521888, 0.2169442391873725, 0.21647422560316318, 0.21599340263465028, 0.21550172765220432, 0.21499915970659042, 0.21448565958059523, 0.21396118984011878, 0.2134257148846505, 0.21287920099704705, 0.212321616392529, 0.211752931266813, 0.21117311784329462, 0.21058215041919762, 0.20998000541060302, 0.20936666139627455, 0.20874209916019398, 0.20810630173272268, 0.2074592544303049, 0.20680094489362952, 0.2061313631241682, 0.20545050151900965, 0.20475835490391014, 0.20405492056448302, 0.20334019827545238, 0.20261419032789732, 0.20187690155441665, 0.20112833935214627, 0.20036851370356465, 0.1995974371950247, 0.1988151250329551, 0.19802159505767533, 0.19721686775477565, 0.19640096626401488, 0.19557391638569493, 0.1947357465844738, 0.1938864879905852, 0.19302617439843625, 0.19215484226256077, 0.19127253069090983, 0.1903792814354676, 0.18947513888018422, 0.18856015002622412, 0.18763436447453305, 0.1866978344057327, 0.18575061455735678, 0.18479276219844865, 0.18382433710154555, 0.1828454015120801, 0.18185602011523475, 0.18085626000029073, 0.1798461906225176, 0.1788258837626552, 0.17779541348404432, 0.17675485608746713, 0.17570429006376345, 0.17464379604429345, 0.17357345674932081, 0.17249335693439558, 0.1714035833348187, 0.17030422460827477, 0.1691953712757218, 0.16807711566063135, 0.16694955182667373, 0.16581277551394616, 0.1646668840738445, 0.16351197640268014, 0.16234815287414595, 0.1611755152707368, 0.15999416671423064, 0.15880421159533714, 0.15760575550262193, 0.15639890515081367, 0.1551837683086021, 0.15396045372603404, 0.15272907106161482, 0.15148973080921999, 0.15024254422492245, 0.1489876232538385, 0.14772508045709368, 0.1464550289390085, 0.1451775822746016, 0.1438928544375051, 0.14260095972838535, 0.14130201270395837, 0.13999612810668732, 0.13868342079524618, 0.13736400567582951, 0.13603799763438687, 0.13470551146985493, 0.13336666182845816, 0.13202156313914465, 0.13067032955022034, 0.1293130748672409, 0.12794991249221654, 0.12658095536418182, 0.12520631590117792, 0.12382610594369137, 0.12244043669958934, 0.12104941869058788, 0.11965316170028528, 0.11825177472378934, 0.11684536591896347, 0.11543404255931301, 0.11401791098852929, 0.11259707657670572, 0.11117164367823681, 0.10974171559140733, 0.10830739451967597, 0.10686878153465483, 0.10542597654078226, 0.1039790782416849, 0.10252818410822084, 0.10107339034819396, 0.09961479187772639, 0.09815248229427445, 0.09668655385126979, 0.095217097434367, 0.09374420253927557, 0.09226795725115253, 0.09078844822553106, 0.0893057606707577, 0.08781997833190987, 0.08633118347616393, 0.08483945687958275, 0.08334487781529044, 0.08184752404300125, 0.08034747179986823, 0.07884479579261693, 0.07733956919092842, 0.07583186362203548, 0.07432174916649523, 0.07280929435510124, 0.07129456616689754, 0.06977763002825724, 0.06825854981298773, 0.06673738784342513, 0.06521420489248002, 0.06368906018659708, 0.06216201140959104, 0.06063311470732197, 0.05910242469317302, 0.057569994454294164, 0.056035875558575775, 0.05450011806231664, 0.05296277051855117, 0.051423879986001265, 0.049883492038619054, 0.04834165077568694, 0.04679839883244252, 0.04525377739119621, 0.043707826192910325, 0.04216058354920914, 0.04061208635478994, 0.03906237010020614, 0.03751146888499415, 0.03595941543111638, 0.0344062410966938, 0.03285197589000201, 0.03129664848370578, 0.029740286229307716, 0.028182915171787483, 0.0266245600644089, 0.02506524438367299, 0.023504990344395835, 0.02194381891489083, 0.020381749832235865, 0.01881880161760654, 0.01725499159165739, 0.015690335889933835, 0.014124849478298222, 0.012558546168354206, 0.01099143863285422, 0.009423538421075689, 0.007854855974152147, 0.006285400640346188, 0.004715180690251799, 0.0031442033319142313, 0.0015724747258562312];

/// Nodal L2 errors of the L1 stepper against the exact-in-time
/// eigenexpansion on the same 32-cell mesh at t = 1, for step counts
/// 200, 400, 800, 1600, with the observed halving rates.
pub struct TemporalStudy {
    pub alpha: f64,
    pub errors: [f64; 4],
    pub rates: [f64; 3],
}

pub const L1_VS_EIGEN: [TemporalStudy; 3] = [
    TemporalStudy { alpha: 0.3, errors: [3.803985444895718e-05, 1.8987649718347817e-05, 9.484993627441547e-06, 4.740050479505968e-06], rates: [1.0024503855792697, 1.0013426310129645, 1.0007443810632775] },
    TemporalStudy { alpha: 0.5, errors: [5.203269018854318e-05, 2.5910549782938045e-05, 1.292134107330241e-05, 6.449519711259923e-06], rates: [1.0058786716424688, 1.0037838161927537, 1.0024921777580897] },
    TemporalStudy { alpha: 0.7, errors: [5.337548028243821e-05, 2.6386900617434353e-05, 1.3079425364232504e-05, 6.49534793468659e-06], rates: [1.0163552435265841, 1.012522744510812, 1.0098204450488302] },
];

/// L1 discrete-Caputo truncation errors for the smooth trajectory
/// t^2, evaluated at t = 1 with 20, 40, 80, 160, 320 steps; the
/// observed rates approach 2 - alpha.
pub struct TruncationStudy {
    pub alpha: f64,
    pub errors: [f64; 5],
    pub rates: [f64; 4],
}

pub const L1_TRUNCATION_SMOOTH: [TruncationStudy; 3] = [
    TruncationStudy { alpha: 0.3, errors: [0.001655734220614269, 0.0005281596394461907, 0.00016719735098114086, 5.2620324538343866e-05, 1.6485631431306658e-05], rates: [1.6484251452900789, 1.6594220687796843, 1.6678599384887116, 1.674411000367214] },
    TruncationStudy { alpha: 0.5, errors: [0.005010173300458387, 0.0017957048477847959, 0.0006409632105235374, 0.00022813615965056044, 8.103867516351393e-05], rates: [1.48031026665137, 1.4862367823243912, 1.4903464202272507, 1.49321263839874] },
    TruncationStudy { alpha: 0.7, errors: [0.013188016110938117, 0.005377741779011513, 0.002189478001665135, 0.000890563449173376, 0.0003620209177284117], rates: [1.2941551659227355, 1.296413528854552, 1.2977966481806626, 1.298645342112039] },
];

pub const VARK_EIGVALS_N7: [f64; 7] = [28.763879233900557, 108.13562689365737, 226.34538024345702, 364.53111857653585, 473.72118428552415, 619.5019273633735, 867.0008834035517];
pub const VARK_EIGVALS_N15: [f64; 15] = [28.997353911267773, 112.45426015633848, 247.99958197707744, 430.122085334806, 651.2603265308671, 902.137221345919, 1171.8762528814457, 1447.5997545195498, 1710.3751840423076, 1976.0872238549407, 2130.915981131744, 2350.2029488383346, 2787.9270005571784, 3282.4885696188358, 3809.556255299392];
pub const GALERKIN_EIGVALS_N7: [f64; 7] = [9.997080656247174, 41.54656802088487, 99.48848376240497, 192.00000000000003, 328.2909781877965, 507.02486055054374, 686.5121171873653];
pub const GALERKIN_FORMULA_N7: [f64; 7] = [9.997080656247268, 41.546568020884926, 99.48848376240494, 191.99999999999997, 328.2909781877966, 507.02486055054356, 686.5121171873656];
pub const LUMPED_FORMULA_N7: [f64; 7] = [9.743419838555294, 37.49033200812192, 79.0165206572685, 127.99999999999997, 176.9834793427315, 218.50966799187808, 246.2565801614447];
pub const PH_C3_N7: [f64; 7] = [1.276877761413844, 0.8924889543446245, 1.1531664212076584, 0.4948453608247422, -0.13254786450662737, 0.035346097201767304, -0.008836524300441824];
pub const DIRAC_MINV_N7: [f64; 7] = [-0.2474226804123711, 0.9896907216494844, -3.7113402061855667, 13.855670103092782, -3.7113402061855667, 0.9896907216494844, -0.2474226804123711];
pub const L1_SCALAR_A05_LAM1_TAU01: [f64; 11] = [1.0, 0.781097709855554, 0.6809375561977272, 0.6186298166831773, 0.5740504578988253, 0.5396082353969499, 0.5116987330321591, 0.4883411769754992, 0.46833288329734774, 0.45088933929012015, 0.4354705806323215];
pub const L1_SCALAR_A03_LAMPI2_TAU005_END: f64 = 0.07408706553319228;

pub struct ExactSample {
    pub kind: &'static str,
    pub alpha: f64,
    pub t: f64,
    pub x: f64,
    pub nmax: usize,
    pub u: f64,
    pub ux: f64,
}

pub const EXACT_SAMPLES: [ExactSample; 8] = [
    ExactSample { kind: "a", alpha: 0.5, t: 1.0, x: 0.3, nmax: 4000, u: 0.04754553917872452, ux: 0.1062692329778513 },
    ExactSample { kind: "a", alpha: 0.3, t: 1.0, x: 0.5, nmax: 4000, u: 0.07560250688275637, ux: 1.4053782131469436e-17 },
    ExactSample { kind: "b", alpha: 0.5, t: 1.0, x: 0.25, nmax: 4000, u: 0.01607886722412886, ux: 0.05263244898781602 },
    ExactSample { kind: "c1", alpha: 0.5, t: 0.01, x: 0.5, nmax: 200000, u: 0.5265470466919039, ux: -2.549694386758541e-17 },
    ExactSample { kind: "c2", alpha: 0.5, t: 0.01, x: 0.7, nmax: 200000, u: 0.26205648813971405, ux: -0.2802641575074656 },
    ExactSample { kind: "c3", alpha: 0.5, t: 1.0, x: 0.4, nmax: 20000, u: 0.03931661668121283, ux: -0.014267931754573707 },
    ExactSample { kind: "d", alpha: 0.5, t: 0.01, x: 0.5, nmax: 200000, u: 1.128694823568366, ux: -1.0026163743884069e-14 },
    ExactSample { kind: "d", alpha: 0.5, t: 1.0, x: 0.25, nmax: 200000, u: 0.07011555685610761, ux: 0.28080455507292057 },
];

// Gradient-error conventions on the smooth datum (alpha = 0.5,
// t = 1, levels 3..=7): spectral with the sqrt(2) normalization,
// plain midpoint sampling, and midpoint scaled by sqrt(2).
pub const GH_SPECTRAL_SQRT2: [f64; 5] = [0.0032331893994132946, 0.0008090422892254161, 0.00020228812605870532, 5.05731996791131e-05, 1.2643356030073908e-05];
pub const GH_MIDPOINT: [f64; 5] = [0.001123396393077186, 0.00028264131092184543, 7.077193609630953e-05, 1.7699953252409138e-05, 4.425423792239026e-06];
pub const GH_MIDPOINT_SQRT2: [f64; 5] = [0.0015887224150107732, 0.00039971517519258465, 0.00010008663186280294, 2.503151394292678e-05, 6.258494346233005e-06];

// Classical heat limit (alpha = 1) on an 8-cell mesh at t = 0.1,
// starting from the L2 projection of the smooth datum.
pub const HEAT_N8_V_PH: [f64; 7] = [0.45070876288659795, 0.7596649484536082, 0.9481314432989693, 1.0103092783505154, 0.9481314432989693, 0.7596649484536082, 0.450708762886598];
pub const HEAT_N8_CONSISTENT_T01: [f64; 7] = [0.1472146656279295, 0.27201518839502503, 0.3554022997424525, 0.38468347955321924, 0.3554022997424515, 0.272015188395024, 0.14721466562792884];
pub const HEAT_N8_LUMPED_T01: [f64; 7] = [0.15100938409029338, 0.27901312063084943, 0.36452751796576854, 0.39455246534101635, 0.36452751796576854, 0.2790131206308496, 0.15100938409029352];

pub const PH_SIN_N4_LOAD: [f64; 3] = [0.16787443368140514, 0.23741030088794587, 0.16787443368140517];
pub const PH_SIN_N4_COEFFS: [f64; 3] = [0.744149886578871, 1.0523868620382397, 0.7441498865788712];

pub const REF_E_GAP_MID: f64 = 5.148371239607763e-05;
pub const REF_E_GAP_MAX: f64 = 5.208042828891424e-05;
pub const REF_E_U_MID: f64 = 0.22525856646962195;

pub const STIFFNESS_VARK_N3_DIAG: [f64; 3] = [29.09295817894065, 24.0, 18.90704182105935];
pub const STIFFNESS_VARK_N3_OFF: [f64; 2] = [-14.546479089470326, -9.453520910529676];

// Step-datum table recomputed with the lumped-mass projection
// instead of the consistent one (documents the sensitivity of the
// coarse H1 column to the projection choice).
pub struct ProjectionVariant {
    pub t: f64,
    pub l2: [f64; 5],
    pub h1: [f64; 5],
}

pub const T5_LUMPED_PROJECTION: [ProjectionVariant; 3] = [
    ProjectionVariant { t: 0.005, l2: [0.011098347314336395, 0.00278229696729513, 0.0006960334145056815, 0.00017403668901101924, 4.3510937514514326e-05], h1: [0.2116755116382502, 0.105936453110272, 0.0529802980976293, 0.026491649667895623, 0.013246012270417138] },
    ProjectionVariant { t: 0.01, l2: [0.008048334260942978, 0.002015492406598047, 0.0005040770640233831, 0.00012603186970323277, 3.150875290059763e-05], h1: [0.15770649415593863, 0.07889306664982619, 0.03945141624929408, 0.01972631544899361, 0.009863233624789492] },
    ProjectionVariant { t: 1.0, l2: [0.0008058538067548354, 0.00020146669017422422, 5.0366861997446416e-05, 1.2591727134155276e-05, 3.1479325027095594e-06], h1: [0.01759228200169403, 0.008796224348283047, 0.00439812198582409, 0.0021990622509756906, 0.0010995311851942381] },
];
