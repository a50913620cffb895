#ifndef ZML_REFERENCE_ZEROS_HPP
#define ZML_REFERENCE_ZEROS_HPP

#include <array>

namespace zml {

struct reference_zero {
    double gamma;
    double abs_zeta_prime;
};

// First 100 zeros and |zeta'(rho)| from a 25-digit mpmath run (tools/oracle/zeros_oracle.py).
inline constexpr std::array<reference_zero, 100> reference_zeros{{
    {14.13472514173469379046, 0.793160433356506116},
    {21.02203963877155499263, 1.13683910682797482},
    {25.01085758014568876321, 1.37172128721612994},
    {30.42487612585951321031, 1.30394095040357716},
    {32.93506158773918969066, 1.38211953685562594},
    {37.58617815882567125722, 1.93650796529259432},
    {40.9187190121474951874, 1.49061076148882051},
    {43.3270732809149995195, 1.83351112624545919},
    {48.00515088116715972794, 1.56803147562515911},
    {49.77383247767230218192, 1.41893225042931096},
    {52.97032147771446064415, 2.42657906784644433},
    {56.44624769706339480437, 2.36793492929520102},
    {59.34704400260235307965, 1.39180561676092405},
    {60.83177852460980984426, 1.65414819952699077},
    {65.11254404808160666088, 2.28777901402275527},
    {67.07981052949417371448, 1.78357955921289699},
    {69.54640171117397925293, 2.18631101756452372},
    {72.06715767448190758252, 2.96453398637806615},
    {75.70469069908393316833, 1.77955599530900061},
    {77.14484006887480537268, 1.45754259050021026},
    {79.33737502024936792276, 2.63788620957400339},
    {82.91038085408603018316, 2.62687355921597724},
    {84.73549298051705010574, 2.16177883513601992},
    {87.42527461312522940653, 1.80044349703986341},
    {88.80911120763446542368, 2.17646078129376387},
    {92.49189927055848429626, 3.00508338410953733},
    {94.6513440405198869666, 1.4794021829452774},
    {95.87063422824530975874, 1.69355974452910091},
    {98.83119421819369223332, 3.51576707355527539},
    {101.3178510057313912288, 3.15464729957624478},
    {103.7255380404783394164, 2.16741457375304113},
    {105.4466230523260944937, 1.87368547605748416},
    {107.1686111842764075151, 2.98249715412091729},
    {111.0295355431696745247, 1.5908457594888537},
    {111.8746591769926370856, 1.36115077689314841},
    {114.3202209154527127659, 2.54627840898533152},
    {116.2266803208575543822, 3.11900598621120688},
    {118.790782865976217323, 3.88761699892738377},
    {121.3701250024206459189, 2.29493952033335643},
    {122.9468292935525882008, 1.55914559866775725},
    {124.2568185543457671847, 2.31593636307553479},
    {127.5166838795964951243, 3.93841777854375238},
    {129.5787041999560509858, 2.34394324442838994},
    {131.0876885309326567236, 2.31964683172094107},
    {133.4977372029975864501, 2.2892664242911436},
    {134.7565097533738713313, 2.81753237303091384},
    {138.1160420545334432002, 3.15978709879417557},
    {139.7362089521213889505, 1.80149847684435367},
    {141.1237074040211237619, 2.01814757584067114},
    {143.1118458076206327394, 3.74975782496520345},
    {146.0009824867655185474, 3.24793568110287039},
    {147.4227653425596020495, 2.81719599552549457},
    {150.0535204207848803514, 1.6201641894629866},
    {150.9252576122414667619, 1.58221699083373808},
    {153.0246938111988961983, 4.24197006121036318},
    {156.1129092942378675698, 3.09573853852666572},
    {157.5975918175940598875, 1.74312963993963335},
    {158.8499881714204987242, 2.13577999936771512},
    {161.1889641375960275194, 3.59070284029074491},
    {163.0307096871819872433, 4.11442327764172836},
    {165.53706918790041883, 3.39430669549414073},
    {167.184439978174513441, 2.4560689106037627},
    {169.0945154155688214895, 1.53607568748453861},
    {169.9119764794116989667, 1.97893746812669139},
    {173.4115365195915529598, 3.48644062824315774},
    {174.7541915233657258134, 2.3549401767966071},
    {176.4414342977104188889, 2.65896080225540552},
    {178.3774077760999772858, 2.82057874414518313},
    {179.9164840202569961393, 3.50620601737545066},
    {182.2070784843664619154, 5.01061352879849773},
    {184.874467848387508801, 1.49433696652386036},
    {185.5987836777074714665, 1.23317703154440043},
    {187.2289225835018519916, 2.83572543980028203},
    {189.4161586560169370849, 5.04688832683237774},
    {192.0266563607137865473, 2.76965237139663076},
    {193.0797266038457040474, 2.39064754789414253},
    {195.2653966795292353215, 2.85013133309021279},
    {196.8764818409583169486, 2.1810565482046436},
    {198.0153096762519124249, 3.15790515527644742},
    {201.264751943703788733, 3.38262022823217043},
    {202.4935945141405342777, 2.23309643168936443},
    {204.1896718031045543307, 2.0763257569908522},
    {205.3946972021632860252, 2.80028746579007525},
    {207.9062588878062098615, 4.51709700487441738},
    {209.5765097168562598528, 4.11798651291068897},
    {211.6908625953653075639, 3.31050855980498058},
    {213.3479193597126661906, 2.08522214410452365},
    {214.5470447834914232229, 2.20936583560771741},
    {216.1695385082637002659, 4.41451131030472969},
    {219.0675963490213789857, 4.12808339689385636},
    {220.7149188393140033691, 1.47598748067032176},
    {221.4307055546933387321, 1.61910553355940589},
    {224.0070002546043352117, 2.64772273052025751},
    {224.9833246695822875038, 2.88698302695518075},
    {227.4214442796792913105, 5.14502251026060033},
    {229.3374133055253481078, 3.71618869727590339},
    {231.2501887004991647738, 1.4789735022240874},
    {231.9872352531802486038, 1.46696334010339397},
    {233.6934041789083006407, 4.31834446790239722},
    {236.5242296658162058025, 3.99502459419392161},
}};

} // namespace zml

#endif // ZML_REFERENCE_ZEROS_HPP
