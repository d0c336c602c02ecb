# Published reference values for the four sequences and their constants.

U0_TERMS = [2, 7, 37, 263, 2417, 28027, 402341, 7038841, 148159931, 3712563089, 109757564149, 3798944559521, 152911104014639, 7115199903124633, 380726791842607163, 23316218510440590877, 1627263370489435571681, 128918882760677617877491, 11552650889301910967243591, 1167145691555195174453680873, 132533994626692147587330006821, 16868027334991412027934269842393, 2399919102359943086759656808542601, 380767545057477655978563593953193167, 67213615800749068530221664858688432411, 13172010994867150677120721027635155958683, 2859976570693485153112034466187708219743257, 686682528617038617430680064268466968498081537, 181989044798183541663688889370297517515196111517, 53147632265048501348397745176098125110334396704491, 17075104848461039007372851133376250502663750204947827, 6025728503245542099163202230622130655546040081475114503, 2332277743697360397390383770740373981929559594283584464517, 988695902920484127543775248274484931244783811540124044143033, 458428319483198619698559581351272118153426311552062470034569911, 232191407352013579551444284181079064953131941642986951678503259733, 128306935177570479232920344024389038414863778500648075219839796428039, 77262471513030250393502853824944255913200135566618300105631736306980607, 50641574378922399251192330014656382967577822893810504887594849344704551703, 36090320621425216445497140034432289541679239492008165225937294068619639467327, 27935854540311568015539342808807285187849565278956205286384010899263850602321327, 23462832328500584766568382327173365478079430048860177909877581541123989720361016661, 21360999737211576785338422431325963666102883518908905678348089414209756057051635953587, 21060839639541030063395351245334114185483772374360016194142930442828612891737779289631637, 22467105016813777544485116258196291744778386876073968778147517890484162213859803683513534369, 25909169965412515252506681148990095749726606780099002314502905174508573617746228489871748546723, 32271934472065120861655384293237027409324494044905095791088594746702398704942376733125054278699441, 43381408176305902140543621950486898864885091554676655686964992902964469908489398427666331327222715203, 62884370704463581794965456459909689998123628824897792533509471281126465991310689433673932756599509788977, 98221411760490905494306956037836854551059571696820298915585960674199270183543200955293790927131718028816721, 165184042132681021769791887188782801698600257895075366935736958281716950616574905043497577386969941967834911183, 298890554904348112487720527991850643510607157992953676194954505537256107720355934420944042180902829312816977339237, 581475429130803364684303971355847991011884740903610067188002483431373589170634242894339197382912255444770492516788529, 1215422420362089857501177287341544041537856372600749118270090298422372468147065349680471669738540241709617786322609697869, 2727782697857489146106788892659849021703482123147301564886930368818656714891925222491228227878201405208218605861730056224351]

U1_TERMS = [2, 3, 11, 71, 701, 9467, 168599, 3860009, 111498091, 4002608003, 176359202639, 9437436701437, 607818993573569, 46744099128452807, 4262700354254812091, 458091929703695291747, 57691186909930154615407, 8471601990692484416847631, 1443868262009075144775972529, 284427125290802666440635500171, 64508585190035762546819414183627, 16784808124437614932174625219743493, 4993776940608054381884859117354140207, 1693622624439192850596898688425684156253, 652872150303652679829448688982189886530659, 285293542323304888886344519771469937143536487, 140963744324927916477364026537883297114648288919, 78566634770350201851112613233249621352518449931451, 49283986294561627960640555061706160769690906854022923, 34720429406470258768183815914888303901101991774709965431, 27415670531671050330126039277336819265920565545391648119999, 24216667131296755001605322259453346627082514305800550720897993, 23885779872975194583233136691346966939859444064807445569345585769, 26261487112714455828805540159203377478469231163597234973363591457207, 32131715178214076067056795236138505944078626999475422937130486192963489, 43681253619905074621450113773989825418769170136321252379454614766606166359, 65878617212511188886784609388021172886969769867239371275593094704456564034821, 110065520587337612767203648837734203290342647689360854135096964165421769763752529, 203427912023970020294838450021500390533989530040710368007147009900917855968553351399, 415375873942358441299269337122839761932402658207793314932623991635231742172593505853191, 935804249256980272952060958737414382846312586346952990434523404634062293389892664419564529, 2323295217517751505932465313890362065365858794901067634239480870103584142721470881798817966351, 6348656563110313224340650976172178458119581049994369593576418852525530460001700896268380592778881, 19072970238974087750797237046328431299871707484555332619151420257813012427698695059821888054480341117, 62926331530666287266578271719807062343162631906675529473506076257761043971900814762388755632574676703581, 227750385041077678820469920589455444927584926440864388380892261640619012094225748681562377621385333193418207, 903335494122117370896020983337177104895869530582455065659345397780540716125986492500646589837326868534021348177, 3922542367498515739383907442359821276578045509186299075524781752470520738676108830582907866229737347691015877811937, 18629197067000125297153961788944007351175935766603142706809812251412884818556314349681115112062044781842825756034795743, 96676537421631958314738311575076974803905140204596513707869889409354478810477226127703149269413503506546288674947017660273]

V0_TERMS = [2, 7, 37, 263, 2437, 28541, 414893, 7368913, 157859813, 4035572951, 122006926709, 4328504865941, 178988464493359, 8575347401843113, 473485756611713633, 29985730185033339911, 2168685169398896331137, 178419507110725228550743, 16637432012996855576590853, 1752619810931482386016278601, 207929078572140606038877989927, 27703432292277234733469436505007, 4134210497118546397108136308834859, 689315097196202964965495137524369491, 128115739949050222862582840471603630161, 26485055543003460184635081751737790490077, 6077461162212148557066452641614974845496911, 1544989272770276240261220792252418219068759811, 434325326596750179697353580045791429425537065921, 134783620687025226578673820825558384519207336154317, 46097266778852361448504363290889004635531761516739993, 17347943886981874420443970420868140946401820400065520071, 7173092361682485947892270771803835972422928260858453607407, 3254100011661831611232136493298705387412392951373195138695209, 1617444487417917100687558729024157723212239417105049205352586907, 879701520010113221282468977866177955184625610469562029928973771369, 522884716211311457382881933734811248444218233980070070872631230880863, 339250490647115743863965814841101611982949652546747643275476764917614079, 239982118166606784159149195685824747348672639149205242576158268123241401993, 184884449910265737711094690139028338000389030665443236649379240370457305194787, 154960974757709732244675556861019464916396672688626613577336846980107870399018839, 141155915150616389787295897404981268121947908056377882549238072042805469437462201529, 139604984790024984145388927468808191785119025746161167673009811548383355891698542136891, 149765998293883963343035308612731967867079095247370202486975809683668731161658111306657657, 174114732976483856298883741253646400700502214947933955176613690774953938657818718931282624893, 219169816049475948683902115215449593142872956043166943557319026467651602225372216081049741660611, 298451993534373806623650289915249066872161006037143623026061596103037375838953663122116770277382949, 439293039174351239982172204282869818268253373739343691886194512800027855135997320619127387923872014543, 698343654982793010624358484035687964472850469556453581342613517316253669396871791308763924026132123760607, 1198060655508707745779557753546421413142255593696270754672148422239141624420672823287083415254300395417965501]

V1_TERMS = [2, 3, 11, 107, 2179, 82567, 5583143, 655201697, 130520191667, 43329381463117, 23597530857908669, 20797360003215286823, 29308490295076752347591, 65339739080988479904887093, 228234724532861569787299652557, 1238274121008683979152081043208907, 10351929871038747992968349628529933369, 132377627814659825963442241922323085531281, 2571924431265830939301333200025838230553258111, 75444021281138938952784058763440328832674279137379, 3321792690361474996860493644715305084765269665618308593, 218334968978888575041251552042761003273126503339991819805711, 21313024242043949178681237334671968485268350209972689142921272311, 3074938372000025291498303992795936754870780958689717268965025942217421, 652699669482172490282676934161157626451563086120385162535269761584611164891, 202954341407401758711971116110740483720959788623998723081904830450235799301455001, 92068291715480127499309984357403867854404579474168356085167170809287646464621493486539, 60695341747074675397238519076499100023378038633955539549785834148853452904417109346308828203, 57932381065520990940788136270703237808648713719064852256708632133701671379292822256881318312054749, 79775438051362650422150211455881095335234448128976516405260227497055762925476123088536682518558068264719, 157953002384645846684507621385570194843236608277992153896832171414564999397298416337569247881342848591283299077, 448218023429213077510369041645769927017724940200139449677904128693536735557982666683613555813590118041533707177284109, 1817203326090311474967634955781151218614737112438216353687278467124115663657822407036267438048265899170654453206580563655933, 10494808841256377765357372039924083655934940312221612796643230884698875056479434676791687814866856932440812157229770756469630996711, 86090774305122249290229925418058465009990807185907846560219569763545889443058081725721622147801810064903826074508934515691184867637172769, 1000347508517387353270513325371105953362159825422511167570872816845501712339259887158859747928688702884428371720102318582972487111543654892801537, 16421101856563194839557280056282494184950148543933069298981023990360609355544085079748898408124808926312513804656051993675638200359333137786941844316201, 379836540175975030113062603753337900591727863301103453960792718994156443595822557063622431071968739751229557701840080004011794990745699224003559273636329651347, 12349763261419490664872839116828391201961629448366114180261194991233970720050771043743676012420595596811061907669149836003425275652498680010032983457572710140036235767, 563052020283284540798895877117107285662666099221367919863537142485516428006736704505330639884360962557003813871251807868889956902637227893273487951850280313438932076204179859]

U0_BACKTRACKS = [(5, 2417), (7, 402221), (6, 28027), (17, 1627263370489435571681)]

C0_DIGITS = '2.007334080333576928956181316653840772831434461478017370705960293321699050171486297563613802880600998767775141388245083072913544366923411581602'
C1_DIGITS = '2.267996267706724247328553280725371774527042254400818772275590829050783740751469573572173836290992570042731587317115765881934097281139085997966167707719867142706558816816'
D0_DIGITS = '1.50392852406952063352768906789758319919073884958113842900299935065765954756163057643171018908088652246874013053730909403941879035447355628459322003109068400114528356779'
D1_DIGITS = '1.735514950033001182139083711446675061088785716263588868177608379918716910367529514327681734076327005625684384859202969842134411317860914934592312814997101209719110536882943842960802987896'
