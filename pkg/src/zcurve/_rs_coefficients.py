"""Power-series coefficients of the Riemann-Siegel correction terms.

Generated by tools/gen_rs_coefficients.py; do not edit by hand.
C_COEFFS[k][j] is the coefficient of (p - 1/2)**j in C_k(p).
"""

C_COEFFS = (
    (
        0.3826834323650898,
        0.0,
        1.7489618723100817,
        0.0,
        2.118025207685496,
        0.0,
        -0.8707216670511481,
        2.4029469479862877e-81,
        -3.4733112243465167,
        1.4036459684860418e-81,
        -1.6626947308999325,
        -1.2025333210789268e-81,
        1.216731288919232,
        -1.4631026625992203e-81,
        1.3014304161007977,
        -3.819632124707002e-83,
        0.03051102182736167,
        5.150367810673496e-82,
        -0.3755803051545095,
        1.6096716904350163e-82,
        -0.1085784416564066,
        -8.217835879160348e-83,
        0.051832902999549624,
        -5.040401127295314e-83,
        0.029999480619902277,
        4.0207700760540697e-84,
        -0.0022759396706125644,
        8.085478901671116e-84,
        -0.004382647416580339,
        7.782559521068545e-85,
        -0.0004064230183729847,
        -7.918701718848256e-85,
        0.0004006097785422114,
        -1.821301244881744e-85,
        8.971057991388841e-05,
        4.7789626570620235e-86,
        -2.3025650027239108e-05,
        1.981580456056043e-86,
        -9.380006601906792e-06,
        -1.3541073462042792e-87,
        6.323514947609108e-07,
        -1.416314223740361e-87,
        6.551022819231502e-07,
        -4.8064043947895e-89,
        2.210523745552697e-08,
        7.237487620759303e-89,
        -3.322316176445629e-08,
        8.120922759721957e-90,
        -3.734910989933656e-09,
        -2.690591374810415e-90,
        1.2445067060797738e-09,
    ),
    (
        0.0,
        -0.053650205256750697,
        0.0,
        0.11027818741081483,
        -5.325893759368738e-82,
        1.2317200154315227,
        -7.466501224444567e-82,
        1.2634964862799458,
        1.2564966506922665e-81,
        -1.695108997559503,
        2.64984887247096e-81,
        -2.9998711967650102,
        1.1005586863680811e-82,
        -0.10819944959899208,
        -2.2178257917760465e-81,
        1.9407662946212714,
        -9.877370742560936e-82,
        0.7838423561500687,
        6.92132713424467e-82,
        -0.5054829667900366,
        5.652804075064252e-82,
        -0.38450723496057976,
        -5.8562195093551804e-83,
        0.03747264646531532,
        -1.4976553787187282e-82,
        0.09092026610973176,
        -1.8008239828010275e-83,
        0.01044923755006451,
        2.2540521116463237e-83,
        -0.012582979651583417,
        6.292691168413242e-84,
        -0.003399503721151274,
        -1.9807221570994905e-84,
        0.0010410950537714891,
        -9.750188253401538e-85,
        0.0005010949051118486,
        7.836678739876212e-86,
        -3.956359669003182e-05,
        9.560862960858528e-86,
        -4.7624592453571896e-05,
        3.7562192354405703e-87,
        -1.8539355338085133e-06,
        -6.503550266870308e-87,
        3.1936918080068973e-06,
        -8.33878170273707e-88,
        4.0907807608506065e-07,
        3.13914909066895e-88,
        -1.5446624332576631e-07,
        6.994462835180947e-89,
        -3.466307491769133e-08,
        -1.0292626252034159e-89,
        5.158711258806155e-09,
    ),
    (
        0.005188542830293168,
        6.745323245657258e-84,
        0.0012378633552253898,
        4.728217135798049e-83,
        -0.18137505725166997,
        -6.301521102779144e-83,
        0.14291492748532125,
        -8.46825386060743e-82,
        1.3303391766687565,
        -2.8607917072854696e-82,
        0.3522472353403734,
        2.1947643249992917e-81,
        -2.421001595891951,
        1.738678312019846e-81,
        -1.6760787022538108,
        -1.5664739177470194e-81,
        1.3689416723328371,
        -1.9532643279716844e-81,
        1.5539019430222982,
        2.3091200687392667e-82,
        -0.1722164273472998,
        9.194049920853574e-82,
        -0.6359068055045431,
        1.520693377865463e-82,
        -0.09911649873041208,
        -2.2482139733486255e-82,
        0.14033480067387008,
        -7.989287488696531e-83,
        0.04782352019827292,
        2.994092355744302e-83,
        -0.017356040641479782,
        1.816925643592777e-83,
        -0.010225012534028593,
        -1.6816277932547562e-84,
        0.0009274149159794888,
        -2.5119961794426294e-84,
        0.0013572194372373386,
        -1.2068252067391399e-85,
        6.41369012029388e-05,
        2.3272012868143534e-85,
        -0.0001230080569819663,
        3.483067877005614e-86,
        -1.83135074047892e-05,
        -1.4861212394667686e-86,
        7.821628604322627e-06,
        -3.8026586656334168e-87,
        2.0087542484759946e-06,
        6.287338472919666e-88,
        -3.3532765393185714e-07,
        2.706383976353666e-88,
        -1.4616020917418232e-07,
        -1.3185340187083053e-89,
        7.261497384040072e-09,
    ),
    (
        -9.980594931605051e-86,
        -0.0026794321814389136,
        -1.1485952548247222e-83,
        0.02995372109103515,
        1.764542191599966e-83,
        -0.042570172541828696,
        1.6519743662095783e-82,
        -0.28997965779803886,
        -3.0617709227342293e-82,
        0.4888831999235446,
        -9.99575886748671e-82,
        1.230855876395746,
        7.251827390434688e-82,
        -0.8297560708527408,
        2.3292165391962433e-81,
        -2.249763536666567,
        -6.146285235044738e-83,
        0.07845139961005472,
        -2.1552624118894917e-81,
        1.7467492800868893,
        -6.200084614146783e-82,
        0.45968080979749937,
        9.27556670348347e-82,
        -0.6619353471039775,
        4.696472887654733e-82,
        -0.31590441036173633,
        -1.9711036440347976e-82,
        0.12844792545207495,
        -1.6145282692240318e-82,
        0.10073382716626152,
        1.5465706971993356e-83,
        -0.009530183848825268,
        3.252040626243877e-83,
        -0.019264421687514088,
        2.174719367723249e-84,
        -0.001246463715876929,
        -4.2210293188298315e-84,
        0.0024243969641103086,
        -7.71916938698923e-85,
        0.000437647697741857,
        3.6477022642942176e-85,
        -0.00020714032687001792,
        1.1074081124795597e-85,
        -6.274344504186516e-05,
        -2.022212155943023e-86,
        1.157534381459567e-05,
        -1.0209423837494088e-86,
        5.88385492454038e-06,
        5.292501494954914e-88,
        -3.124677400696336e-07,
        6.732074769601368e-88,
        -4.0240657754989595e-07,
        1.9773775017536556e-89,
        -1.199110779489633e-08,
    ),
    (
        0.00046483389361763383,
        5.170365410412724e-85,
        -0.004022642946136188,
        7.042355433681612e-86,
        0.003847177051796127,
        -3.4663961821640815e-83,
        0.06581175135809486,
        1.0795307271506848e-82,
        -0.19604124343694448,
        1.8294640546286892e-82,
        -0.20854053686358853,
        -7.470511440716505e-82,
        0.9507754185141751,
        -5.577996165525586e-82,
        0.5341535312914873,
        1.6667351767551837e-81,
        -1.67634944117634,
        1.2470859837408044e-81,
        -1.076747157875129,
        -1.448386499008687e-81,
        1.235339301656597,
        -1.3295068068392717e-81,
        1.0257825340057276,
        5.2598085046295555e-82,
        -0.40124095793988546,
        7.148311905416769e-82,
        -0.5036663995108304,
        -4.7913218351783105e-83,
        0.03573487795502745,
        -2.1862820275980603e-82,
        0.14431763086785418,
        -2.429795289232038e-83,
        0.01509152741790347,
        4.1213395432713805e-83,
        -0.026098874779194363,
        9.94229239003279e-84,
        -0.006126628379519262,
        -4.9549093896987545e-84,
        0.003077503129870841,
        -1.8866234722121113e-84,
        0.0011562478934088753,
        3.655502680892646e-85,
        -0.00022775966758472127,
        2.2880558274774807e-85,
        -0.00014189637118181445,
        -1.1533958674944208e-86,
        7.4648603079559195e-06,
        -1.949128590460966e-86,
        1.2479701645409117e-05,
        -7.644023491198555e-88,
        4.863945184002094e-07,
        1.2140580095085094e-87,
        -8.210237414123167e-07,
        1.328381213023963e-88,
        -9.22325839749527e-08,
    ),
)
