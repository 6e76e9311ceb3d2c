// Generated by tests/oracle/generate_clime_oracle.py -- do not edit.
#ifndef SPECPREC_TESTS_CLIME_ORACLE_EXPECTED_HPP
#define SPECPREC_TESTS_CLIME_ORACLE_EXPECTED_HPP

namespace oracle {

inline constexpr double kClimeLambdas[3] = {0.05, 0.1, 0.3};

// [seed-1][lambda][column], seeds 1..50, columns 0..5.
inline constexpr double kClimeObjectives[50][3][6] = {
    {
        {1.79632137476, 2.00448871816, 1.48454119176, 1.66737777095, 1.71539675957, 1.70564816074},
        {1.52876321011, 1.59674371213, 1.2246156865, 1.35279815573, 1.45455200362, 1.34424375053},
        {1.06398978165, 0.89633046736, 0.859840910686, 0.893594307621, 0.997649295603, 0.795238696151},
    },
    {
        {1.7127934381, 1.8483240737, 1.31811944996, 1.8148841575, 1.412546916, 1.91355176415},
        {1.39844391191, 1.5620367956, 1.07899149314, 1.47014788748, 1.04789856768, 1.65545624034},
        {0.924621165439, 1.01197912776, 0.828554761349, 1.04999030283, 0.807108930039, 1.18378516169},
    },
    {
        {1.63501034316, 1.71263837301, 1.94357560946, 1.36527105754, 1.75642376596, 1.92766000162},
        {1.33684718311, 1.32166228443, 1.5728617873, 1.08432182371, 1.43220397316, 1.51751451637},
        {0.880190321327, 0.890952837042, 0.963637856491, 0.630515139162, 1.09231779083, 0.815829261177},
    },
    {
        {1.95589803848, 2.09307003745, 1.93311002938, 1.76913496362, 2.06962752513, 1.334835024},
        {1.58472772075, 1.71062071325, 1.57259079808, 1.46682214819, 1.75993353815, 1.14141645022},
        {0.879844849472, 0.730153977594, 0.909767087037, 0.79879588097, 0.96817576351, 0.873524225388},
    },
    {
        {1.77939102047, 1.93277653794, 1.55387210121, 1.24868301876, 2.01366815, 1.90004136745},
        {1.43344108995, 1.68331748566, 1.25443536696, 0.981014349086, 1.65324463418, 1.58561324304},
        {0.736111091931, 1.09765954646, 0.656135108641, 0.697097035808, 0.831626210799, 0.874303135245},
    },
    {
        {1.48838295708, 1.59614072162, 1.88794692109, 1.68907554787, 1.81662336482, 2.01303209378},
        {1.23089155191, 1.27701762415, 1.41242211706, 1.2558680647, 1.48172747174, 1.6646574812},
        {0.8815785133, 0.923875403228, 0.672423711152, 0.663995459818, 0.946894187818, 0.710787691273},
    },
    {
        {1.62457911303, 1.17103738328, 1.38861462632, 1.70927260938, 2.00404789683, 1.98207172182},
        {1.29562301914, 0.976801764406, 1.16005166358, 1.4613144568, 1.61770126998, 1.68083174099},
        {0.785868326332, 0.645059200954, 0.749894964542, 1.07433243149, 0.845061137711, 0.973259087335},
    },
    {
        {1.74501109642, 1.78278011626, 2.01630826246, 1.78446106529, 1.81174151632, 2.19792933805},
        {1.33914887352, 1.34368182842, 1.483650089, 1.39261893624, 1.54306225141, 1.74728183338},
        {0.76808889083, 0.899256095397, 0.723010500831, 0.87423227385, 0.797095157552, 0.9871727025},
    },
    {
        {2.02469634855, 1.51218676064, 1.69237746926, 1.77188797954, 1.9350179979, 1.8882866102},
        {1.65362974946, 1.19784277942, 1.33188888405, 1.2949113726, 1.65530481078, 1.54177483021},
        {0.963415230818, 0.738172653576, 0.734029313014, 0.738440685244, 1.05766226867, 0.804994758757},
    },
    {
        {2.08898749628, 1.52117112741, 1.39627547796, 2.00141899731, 2.0190831039, 1.86401830486},
        {1.60336118789, 1.23250398511, 1.18307285945, 1.69485509676, 1.57038345687, 1.59124427502},
        {0.648718595008, 0.822365417477, 0.706986696505, 0.94132761793, 0.745519280671, 0.797982574773},
    },
    {
        {2.16539818793, 1.3219858878, 1.97909164995, 1.6901420844, 1.8394322549, 1.82681016418},
        {1.70238193029, 0.988662796752, 1.52400790998, 1.2745568792, 1.47103839529, 1.56036788761},
        {0.871870502303, 0.717194295943, 0.849124241617, 0.875182505894, 0.979165382364, 0.789768945166},
    },
    {
        {1.81814031161, 1.85560020632, 2.01816024135, 1.64586985317, 1.52371357158, 1.62721875722},
        {1.48737964253, 1.39788719294, 1.77225133046, 1.26663183727, 1.14327869303, 1.42745331817},
        {1.05146600382, 0.719408927235, 1.12210188873, 0.728143968529, 0.799957144607, 1.11024146969},
    },
    {
        {1.71296489427, 1.66346032176, 1.51757717185, 1.86014981151, 1.82940298555, 1.63614578851},
        {1.42716817012, 1.3221854915, 1.13562289103, 1.53744997437, 1.59056047885, 1.33747737051},
        {1.11001968787, 0.894942341123, 0.788630393122, 1.04997592381, 0.858551016506, 0.668705248847},
    },
    {
        {1.34654929363, 2.0013322941, 1.66300376246, 1.82114770726, 1.92169536871, 1.3264435015},
        {1.12978686677, 1.69035509193, 1.40649037558, 1.48647780946, 1.55100763214, 1.14136729374},
        {0.737693929735, 0.947073186323, 0.70589710936, 0.841921812014, 0.75926565635, 0.779269053871},
    },
    {
        {1.95588496188, 1.6034603002, 1.92106615566, 1.93202257357, 1.41793382793, 1.300570417},
        {1.63450310591, 1.32456018013, 1.67130496703, 1.68894284484, 1.11323700071, 1.12041187203},
        {0.971788569972, 0.780053359297, 1.20952099902, 1.11942843103, 0.781962252888, 0.837603833608},
    },
    {
        {1.55373789897, 1.45894157718, 1.43313640886, 1.22811990754, 2.00659129587, 1.84715935731},
        {1.3183938242, 1.11594693568, 1.13816647677, 0.990604354763, 1.66815030466, 1.42722578824},
        {0.898935230657, 0.681496982567, 0.854092589616, 0.770470053704, 1.05664307682, 0.863612576748},
    },
    {
        {1.44655520631, 1.87991646149, 1.93782559984, 1.64382122248, 1.18400710427, 1.46102437735},
        {1.28520059128, 1.59666466365, 1.602063053, 1.22184734406, 0.926846864195, 1.1185401988},
        {0.933012043801, 1.0522301001, 0.874810295838, 0.781695815799, 0.665023042708, 0.723281306915},
    },
    {
        {1.45209433266, 1.5497671563, 2.0329978726, 1.92857237635, 1.44695738817, 1.30072657352},
        {1.18385521623, 1.23202271995, 1.66601707879, 1.62762041409, 1.22227998705, 1.01290607547},
        {0.585959923861, 0.762994420889, 0.947555442836, 1.16064617103, 0.924201861358, 0.776895851033},
    },
    {
        {1.7037238981, 1.907980976, 1.67963247955, 1.91569962894, 1.82967120981, 1.12794061621},
        {1.49759183586, 1.55344935766, 1.42386998232, 1.63198111315, 1.41802668587, 0.941163668435},
        {1.13959641485, 0.937340734077, 0.990552517736, 0.976228934455, 0.902917619087, 0.683337397974},
    },
    {
        {1.70838441629, 1.60057191094, 1.3874289043, 1.8492773859, 1.2870043517, 1.65345064892},
        {1.32284934294, 1.28321746311, 1.13382666083, 1.38076444673, 0.968293127479, 1.37272035687},
        {0.81382607803, 0.888886100717, 0.822253476524, 0.878148376365, 0.721228920581, 1.0459049072},
    },
    {
        {1.62908239856, 1.34912835545, 1.85711101753, 1.53118282911, 1.76262108111, 1.58430153135},
        {1.28950704516, 1.07963362715, 1.67163632085, 1.33135298319, 1.354101073, 1.36159051657},
        {0.796802553742, 0.752491395385, 1.22530050576, 0.978109911382, 0.826719426564, 1.03061243404},
    },
    {
        {1.69835727597, 1.90537029749, 1.80026999537, 1.58999461313, 1.82618802884, 1.69065688625},
        {1.5252958588, 1.54194912006, 1.51861785258, 1.25287965661, 1.48189097565, 1.42685699754},
        {1.01722654219, 0.788171791721, 0.752902590241, 0.677522256803, 0.806942436968, 0.92325755432},
    },
    {
        {1.78572927546, 1.62941191444, 1.84966092657, 1.09048656559, 1.80280304279, 1.56992163448},
        {1.38974443595, 1.42370148082, 1.46705104506, 0.891753343579, 1.46029689509, 1.3452464847},
        {0.745942087471, 0.861606880288, 0.75918056668, 0.691463366159, 0.937310247809, 1.04630282143},
    },
    {
        {1.52166277208, 2.14469879089, 1.47712370352, 2.16677530033, 1.82632496258, 1.78951939593},
        {1.19991084579, 1.80369480488, 1.25407509722, 1.72427267021, 1.44139872307, 1.36275463669},
        {0.749525607224, 1.14686149105, 0.697492135651, 1.03112235269, 0.73178166878, 0.790565079604},
    },
    {
        {1.87062760934, 2.10131446476, 1.86139093997, 1.85895795388, 1.25326274823, 2.09147852795},
        {1.63660842738, 1.68469097843, 1.63484464066, 1.6311528145, 1.05626095417, 1.73523859729},
        {1.20521609252, 0.795457395728, 0.846314585771, 1.14148644584, 0.810704067289, 0.7383223995},
    },
    {
        {1.82474752313, 1.99597585745, 1.57833348282, 2.02153975452, 1.93176767867, 1.02093811291},
        {1.43834436722, 1.60947250291, 1.28144930633, 1.68782070992, 1.52906581681, 0.90298767981},
        {0.899925900627, 0.833887446219, 0.874882644598, 0.858109978801, 0.639811200982, 0.702323750963},
    },
    {
        {2.03367296445, 1.26950480337, 1.73997740802, 1.80223564837, 1.84384689197, 1.63978179462},
        {1.72458146777, 0.980495239099, 1.30039328683, 1.47978631264, 1.61536599073, 1.25868337936},
        {1.22012205701, 0.708703810649, 0.86180383635, 1.06814414584, 1.09871503867, 0.913403943095},
    },
    {
        {2.04070529763, 1.93529429207, 1.75276563582, 1.49573608048, 1.54980946742, 1.8040569233},
        {1.67391264121, 1.54111368097, 1.48297640886, 1.24387178375, 1.2462406145, 1.50677236471},
        {1.00042005319, 0.841365245707, 0.73565393519, 0.804658033247, 0.873493757652, 0.932157264275},
    },
    {
        {1.7467573344, 1.87798484252, 1.45044127089, 1.71117780197, 1.6023869805, 2.02104108663},
        {1.44525124921, 1.55714051138, 1.04009612085, 1.36039429138, 1.25596216752, 1.57020487439},
        {0.928631404339, 1.15790354882, 0.663805909598, 0.778031444487, 0.891174603915, 0.967951404178},
    },
    {
        {1.69478426293, 1.99474717893, 1.31875100618, 1.47984126796, 1.4090167376, 1.66661908378},
        {1.51749547902, 1.62140376777, 1.08605415361, 1.26577404126, 1.16212297679, 1.42685546065},
        {1.06316901834, 0.873033498513, 0.765329595613, 0.857931233362, 0.797240081983, 0.81816021015},
    },
    {
        {1.59243405198, 1.50417465871, 1.93964528836, 1.42382532182, 1.52624684581, 1.92377822047},
        {1.38914306216, 1.2857531489, 1.61482925002, 1.15757289503, 1.24220550384, 1.66796415915},
        {0.905740695918, 0.951213972708, 1.09072325771, 0.747381043921, 0.723139450319, 0.981942530727},
    },
    {
        {1.77342736281, 1.88947395352, 1.90938179377, 1.80500210721, 1.53145897287, 1.45969210255},
        {1.40892233742, 1.43996498967, 1.63550349686, 1.59425421176, 1.18677214273, 1.13293224137},
        {0.84477563432, 0.99083775936, 1.17006771301, 1.0606959616, 0.785559554403, 0.769083035495},
    },
    {
        {1.48491893845, 1.88847701071, 1.65316842525, 1.36511505504, 2.09405600086, 1.99358904842},
        {1.2563219425, 1.57633801053, 1.35933606153, 1.0629466388, 1.62455198805, 1.63748830659},
        {0.810114709072, 0.749854829902, 0.870856678071, 0.778028871011, 0.789960276478, 0.819171428361},
    },
    {
        {1.42249323236, 1.65681408186, 1.61412893092, 1.42644845184, 1.80749130118, 1.53198988239},
        {1.15777381692, 1.38280644313, 1.36554572268, 1.22977707007, 1.40079851545, 1.14393000144},
        {0.770170253978, 0.956132217583, 0.996303452821, 0.868022462993, 0.900679379551, 0.774632161661},
    },
    {
        {1.98744142498, 1.73413728302, 1.42088605758, 1.42979573902, 1.88906251688, 1.64409836074},
        {1.56863693024, 1.28196240464, 0.992142252201, 0.958873990282, 1.5384197888, 1.31334545865},
        {0.93875111505, 0.807797395144, 0.672003272262, 0.66132781037, 0.998905854709, 0.948781148883},
    },
    {
        {1.49227964435, 1.75724898606, 1.85499493294, 1.91087825641, 1.50712670156, 1.83998990755},
        {1.15229460131, 1.4662167487, 1.53001612306, 1.67130704591, 1.23675739228, 1.55990041033},
        {0.767043575064, 0.883997153139, 0.787814166398, 1.16774554743, 0.8434385513, 0.879095620765},
    },
    {
        {1.66595854609, 1.2114164665, 1.40479611842, 1.79517323141, 1.78505860141, 1.4012300195},
        {1.41140013552, 1.02632975691, 1.10562869912, 1.49972285663, 1.59228716194, 1.18810104025},
        {0.790263128131, 0.755571504862, 0.671623274529, 0.853623125884, 0.91545347038, 0.830016345141},
    },
    {
        {1.68888741166, 1.52631932796, 2.16593169912, 1.36509508064, 2.03437500736, 1.87066058604},
        {1.48881435462, 1.23492591102, 1.77469895765, 1.09200213651, 1.68451976037, 1.45629423424},
        {1.05198566855, 0.76797761683, 0.812887881155, 0.77714404549, 0.931262394743, 0.737536540546},
    },
    {
        {1.21048088586, 1.33648939887, 1.52231091421, 2.12418639774, 2.05910319088, 2.13769825727},
        {0.965359188112, 1.07937043097, 1.26928590026, 1.73814190846, 1.61744471701, 1.75979668883},
        {0.747736021943, 0.780388204515, 0.892625343995, 0.958150084249, 0.907432643908, 0.863579166161},
    },
    {
        {1.7949800998, 1.39485660392, 1.46356980411, 1.92515889621, 1.79974937683, 1.90368568779},
        {1.53017650945, 1.11178232293, 1.32581914321, 1.60266000498, 1.49293858285, 1.6406149536},
        {0.725300856265, 0.798472109387, 1.03119266694, 0.81011840776, 0.898639930271, 1.09028144975},
    },
    {
        {1.30193512771, 1.75005041516, 2.01157334546, 1.60744096045, 2.04757217959, 1.657829496},
        {1.16284511446, 1.5046948547, 1.6947868409, 1.36251055298, 1.54328537785, 1.3642319702},
        {0.888377139992, 0.927162179041, 0.926372638628, 0.829489382709, 0.695763715992, 0.912677337484},
    },
    {
        {1.40537459371, 1.49748415536, 1.8483264769, 1.56041748173, 1.57549714777, 1.84164298519},
        {1.18149390613, 1.25489467363, 1.4515058582, 1.26378260556, 1.23356153764, 1.54386130648},
        {0.796350094497, 0.90707298584, 0.920040305456, 0.860888273356, 0.73332739969, 1.10280520996},
    },
    {
        {1.99968803233, 1.67182477664, 1.33931731104, 1.58059772433, 1.6805971743, 1.40993621171},
        {1.73838511255, 1.40023958669, 1.11655193851, 1.36547577358, 1.35532474988, 1.20638446282},
        {0.966069746691, 0.703962220225, 0.848765203606, 1.04608979739, 0.670151446346, 0.666649854075},
    },
    {
        {1.72379475347, 1.66301070819, 2.13404702137, 1.93336064859, 1.68880083144, 2.12863618689},
        {1.34607969232, 1.39418956453, 1.72051465535, 1.47889456308, 1.42580921844, 1.72560841871},
        {0.788221889279, 0.705845849584, 0.814166564712, 0.612964819365, 0.78044104602, 0.89074262744},
    },
    {
        {1.88559099346, 1.93544705175, 1.90085311825, 1.83940895199, 1.71240230607, 1.87270609015},
        {1.51732056593, 1.46132988107, 1.53244005359, 1.43588759078, 1.45795009238, 1.56413190264},
        {0.936061879571, 0.87389932411, 0.965430999609, 1.00942493764, 0.853261876922, 1.0488753141},
    },
    {
        {1.55058899102, 1.36034587126, 1.80676456577, 1.25227701147, 1.46511686369, 1.83047408904},
        {1.29287084829, 1.15190484973, 1.47813612747, 1.11408875293, 1.14120502557, 1.37735293389},
        {0.896102222734, 0.75734026006, 0.842020955223, 0.866513474501, 0.772259903752, 0.940605577484},
    },
    {
        {1.69156568103, 2.05913727659, 1.82909949722, 1.9241670959, 1.72488428934, 1.38285312639},
        {1.43489743745, 1.59294877116, 1.49575712604, 1.62400508179, 1.45849831606, 1.16130234628},
        {0.982220489183, 0.940073432087, 1.0685220022, 1.15437197466, 0.929807416145, 0.805993494813},
    },
    {
        {1.57918635115, 1.98670695718, 1.67936805693, 1.43415907583, 1.85066919281, 1.54987220633},
        {1.27018532872, 1.66016556072, 1.51880201883, 1.29649053031, 1.59456964065, 1.32319183936},
        {0.699388457044, 0.858328739234, 1.1711899318, 0.967497335964, 1.00365955783, 0.891811641444},
    },
    {
        {1.80969695396, 2.21068019904, 1.67407820249, 1.43580186629, 1.86313514061, 1.61916008559},
        {1.41740050872, 1.7693589035, 1.25617854591, 1.10366894325, 1.59861895497, 1.22043078905},
        {0.777775636792, 1.02662529975, 0.797330662552, 0.656283043686, 1.10522954688, 0.785566258115},
    },
    {
        {1.88690258686, 1.57485901599, 1.37971869307, 1.93895043211, 1.9110073467, 1.37255978085},
        {1.66198082731, 1.1703900889, 1.11126582424, 1.58440351141, 1.56885093323, 1.05689663133},
        {1.12419584518, 0.66407353732, 0.637492058618, 0.977883995088, 0.973186871091, 0.709744835086},
    },
};

}  // namespace oracle

#endif  // SPECPREC_TESTS_CLIME_ORACLE_EXPECTED_HPP
