"""Airy node table generated by tools/gen_airy_nodes.py; do not edit."""

LO = -16
STEP = 0.25

# (Ai, Ai', Bi, Bi') at x = LO + i * STEP
NODES = (
    ("-1.43057931669099697777469364302e-1", "-9.74764441621272717957259409625e-1", "2.4312315142822721668758833254e-1", "-5.68455605976135372722643043113e-1"),  # -16.0
    ("-2.82942429318129373067797919105e-1", "-5.25974593125172550272758773775e-2", "1.21214373681421640361502780034e-2", "-1.12274546500706077181523917526"),  # -15.75
    ("-1.6644795409041976738816182811e-1", "9.04937935430212199506742570102e-1", "-2.305265307547122107351091694e-1", "-6.59050956680073411988300985112e-1"),  # -15.5
    ("9.92224596813958353663555744074e-2", "1.04706560505768358761141201741", "-2.67697824813853515127966417512e-1", "3.83105814898224308587317197609e-1"),  # -15.25
    ("2.78217490870828929527621508771e-1", "2.72374204308642020825783880234e-1", "-6.91265945310100611859281040106e-2", "1.07642975308437478674419608"),  # -15.0
    ("2.16296562097007208961873209263e-1", "-7.2600457674912274225246287656e-1", "1.89980528250653010480940351893e-1", "8.33962183364247060269097838354e-1"),  # -14.75
    ("-3.05974189395514228211937209558e-2", "-1.09532127288053921503362825467", "2.87492243517527755238389822801e-1", "-1.11562222867033313456477556047e-1"),  # -14.5
    ("-2.52444959425007492210581921061e-1", "-5.46119033635100295803798203665e-1", "1.43489873050593975557227356291e-1", "-9.50493667702868008701703109371e-1"),  # -14.25
    ("-2.65983482784077798384791432727e-1", "4.43024877002843641171516892064e-1", "-1.19665552797624523132600974098e-1", "-9.97411818949333524054144257217e-1"),  # -14.0
    ("-6.30061301488254721988024202378e-2", "1.05989422975510864766891373752", "-2.86123867850040880520907777965e-1", "-2.38847388639367670158931119789e-1"),  # -13.75
    ("1.90981243296220292685134038685e-1", "8.26432751425254237939086730202e-1", "-2.23950103580022791467369086074e-1", "6.97608747334081857417677333065e-1"),  # -13.5
    ("2.95338930766366992490444368081e-1", "-4.78693793274135011341340140504e-2", "1.46799951671441541000105445577e-2", "1.07539890898385737179229637898"),  # -13.25
    ("1.71510439370537044631581746108e-1", "-8.71519677879953366722461633491e-1", "2.42613229092627199333415662278e-1", "6.2309724881928773353708865757e-1"),  # -13.0
    ("-8.30090349460380624791930716357e-2", "-1.02574216052844186207842536121", "2.86788058249515440933877936165e-1", "-2.90803088083946124029907257483e-1"),  # -12.75
    ("-2.76274561381160248225171138297e-1", "-4.19331330419505164406021093726e-1", "1.17033367257392776602101509532e-1", "-9.74516536167174072156062825781e-1"),  # -12.5
    ("-2.67644698827142298235520958173e-1", "4.80871368427004454367256426998e-1", "-1.38939849522737939893466013052e-1", "-9.39669986802835168336981567118e-1"),  # -12.25
    ("-6.65551750543731294741896623596e-2", "1.02311045336797072989598432236", "-2.95719912078073056729457514357e-1", "-2.36732197831123316326214286147e-1"),  # -12.0
    ("1.82025201205214995818295443664e-1", "8.41621538942453681709321112759e-1", "-2.4437356536846733474877938064e-1", "6.18814478850853621527465805712e-1"),  # -11.75
    ("3.05422970043592656399609772249e-1", "8.77241543217844430536057444402e-2", "-2.39092723559457575490359519856e-2", "1.03532640469308344089766835764"),  # -11.5
    ("2.22189340043426054326881487873e-1", "-7.10780671748721550939726924067e-1", "2.13361621121309368816793327835e-1", "7.5006555114308271819862161403e-1"),  # -11.25
    ("-8.75958925570238128996608846898e-3", "-1.02732787366457942146118731403", "3.09654767426781886332962993217e-1", "-2.20229953144644665590290948975e-2"),  # -11.0
    ("-2.34647500931595144680742643579e-1", "-6.77570436420927598912697452954e-1", "2.04968241182489968436864274237e-1", "-7.64676652600057284356895522168e-1"),  # -10.75
    ("-3.11926035051050600854618572122e-1", "9.09574873906816728788981087547e-2", "-3.03561232640210131780874915889e-2", "-1.01161408163037751864721746074"),  # -10.5
    ("-1.95401044112007819562174006474e-1", "7.87552561733652478224676007952e-1", "-2.47441627170138382347175698621e-1", "-6.31709003333925353772964879647e-1"),  # -10.25
    ("4.02412384864431906894303140299e-2", "9.96265044132790055904572541289e-1", "-3.14679829643838633161754211502e-1", "1.19414113399909238277525336682e-1"),  # -10.0
    ("2.52624762596343355527049314783e-1", "6.16095785168524459606987427194e-1", "-1.95203378770887292825888775279e-1", "7.83952868424223994580933948426e-1"),  # -9.75
    ("3.19103247719128201375747761947e-1", "-1.08095318811871238996345268762e-1", "3.77854324894665022656306589449e-2", "9.84714070002119703920668708597e-1"),  # -9.5
    ("2.05239808760355423149139789908e-1", "-7.55049768267893324309463042541e-1", "2.50031393210197022015774953888e-1", "6.31084882913572402732343646036e-1"),  # -9.25
    ("-2.21337215473414036741692422741e-2", "-9.75663980926331594712659684273e-1", "3.24947323455244917919428055574e-1", "-5.74005138436692543926549003069e-2"),  # -9.0
    ("-2.38230038459635514418942607485e-1", "-6.73856186120668604462563929064e-1", "2.25454796889457564692403633894e-1", "-6.98424840482248325197464674379e-1"),  # -8.75
    ("-3.30290237630208879021700102899e-1", "-3.23133482846391358728827385293e-2", "7.7544364476584044319490827738e-3", "-9.62969165120174798135927793685e-1"),  # -8.5
    ("-2.54536320996560646554100301234e-1", "6.08518296887413899798568119719e-1", "-2.14480525149236045071271548148e-1", "-7.37790825172635899976728381712e-1"),  # -8.25
    ("-5.27050503563862026220826757939e-2", "9.35560938198306551025522462133e-1", "-3.31251580751137859969876239276e-1", "-1.5945049781298138934993573365e-1"),  # -8.0
    ("1.749779007967651473000206903e-1", "8.11232735506528255227820589994e-1", "-2.8928347775979933597983992754e-1", "4.77966982133396817424878257863e-1"),  # -7.75
    ("3.2177571638064787526732854368e-1", "3.18809506698554596210062906079e-1", "-1.12463485076490806384320815054e-1", "8.77802281545760922367581258916e-1"),  # -7.5
    ("3.23740573211186146221296310767e-1", "-3.00228995047354081462895283994e-1", "1.15591261009556566015113103453e-1", "8.76028714107545526045582615829e-1"),  # -7.25
    ("1.84280835250505637279941519817e-1", "-7.71008168410126547731251654535e-1", "2.93762071854414020123647188691e-1", "4.98244590058113488746116926111e-1"),  # -7.0
    ("-3.33847905887649589908520487653e-2", "-9.06704051692128123535074896429e-1", "3.48340993536418450450807354553e-1", "-7.39167725883266809367520870964e-2"),  # -6.75
    ("-2.38020301997115803594444103496e-1", "-6.74952492513202172998938754366e-1", "2.61012657636483951817420261488e-1", "-5.97170666291622016976274144134e-1"),  # -6.5
    ("-3.49612051610890509854642947549e-1", "-1.91086259523417154368557740364e-1", "7.08168993275164905309089418366e-2", "-8.71759850313910747444806320787e-1"),  # -6.25
    ("-3.29145173629823105231448582529e-1", "3.45935487281342894929779434834e-1", "-1.46698376670557037875260739989e-1", "-8.12898785105067000424680999447e-1"),  # -6.0
    ("-1.88842098999447366802531656222e-1", "7.39165687086684446396315460028e-1", "-3.11409565677711047721648286899e-1", "-4.66668296270723483912034669122e-1"),  # -5.75
    ("1.77815412765749756030201514972e-2", "8.64197217771398390772111894692e-1", "-3.67813453915711991094707777081e-1", "2.5111583073630925988755799561e-2"),  # -5.5
    ("2.19009447845013209566443219717e-1", "7.01566726175188952153958108237e-1", "-3.01347243560747148958165943092e-1", "4.88082537665709975557473748376e-1"),  # -5.25
    ("3.50761009024114319788016327697e-1", "3.27192818554443136794878677427e-1", "-1.38369134901600576850029175603e-1", "7.78411773001899246094423209904e-1"),  # -5.0
    ("3.75932034329142132723614497671e-1", "-1.27099606206420266985375923888e-1", "6.72256985438390997344144960105e-2", "8.23993429888728893820761048755e-1"),  # -4.75
    ("2.92152781055959466881568895485e-1", "-5.23362532315747700708495479274e-1", "2.53872657696932636800524455307e-1", "6.34744767773663709733325412267e-1"),  # -4.5
    ("1.27782927228267284373998566394e-1", "-7.59267412057374064658071787061e-1", "3.71178202229519535612480694333e-1", "2.85534022081812742780993271249e-1"),  # -4.25
    ("-7.02655329492895150990843116318e-2", "-7.90628575368581380296454445828e-1", "3.92234705706999289554491827647e-1", "-1.16670567438340893679567242977e-1"),  # -4.0
    ("-2.51612703014222730332697741609e-1", "-6.32453966261176353332443397096e-1", "3.17185429299666696797709634466e-1", "-4.67801116449629825671663550803e-1"),  # -3.75
    ("-3.7553382314043191193439695158e-1", "-3.43443433454048146287937374099e-1", "1.68939837481058611843442769541e-1", "-6.93116284907288801752443612671e-1"),  # -3.5
    ("-4.19013266805230802239046920624e-1", "-2.45384818794818649737462287615e-3", "-1.60335747389872623185471811221e-2", "-7.59759309220364085505107256293e-1"),  # -3.25
    ("-3.788142936776580743472439165e-1", "3.14583769216598813650787266066e-1", "-1.98289626374926543220644854572e-1", "-6.75611222685258537668032045182e-1"),  # -3.0
    ("-2.68490545912597080857104522729e-1", "5.513380742629775803904987719e-1", "-3.44375865339525527406906748209e-1", "-4.78386899353478877631502462177e-1"),  # -2.75
    ("-1.1232506769296608918746310014e-1", "6.78852734264794363372140030823e-1", "-4.32422471840705293028419503692e-1", "-2.20420154874629587683398427534e-1"),  # -2.5
    ("6.15986587770052775171764237626e-2", "6.95016206701528655939463384014e-1", "-4.53920686750117307045535215442e-1", "4.59044464849105037456227109056e-2"),  # -2.25
    ("2.27407428201685575991924436038e-1", "6.18259020741691041406264291332e-1", "-4.12302587956398488083234054611e-1", "2.78795166921169522685097569411e-1"),  # -2.0
    ("3.65483252214231566996182298118e-1", "4.7865157166730629270946217078e-1", "-3.19503138604568993355955107529e-1", "4.5249462386073408319067246886e-1"),  # -1.75
    ("4.64256577748869406474273366919e-1", "3.09186967202410420416168916646e-1", "-1.91784861157041220012941723266e-1", "5.57908103021897354131693962734e-1"),  # -1.5
    ("5.20045477435299182695547873219e-1", "1.39079563351917750712737311696e-1", "-4.58674687274269062017723114108e-2", "5.99814193557583362384545752284e-1"),  # -1.25
    ("5.35560883292352118799516565639e-1", "-1.01605671166452093950454698454e-2", "1.03997389496944611888689990979e-1", "5.92375626422792350816779229182e-1"),  # -1.0
    ("5.17772575151583611652502954906e-1", "-1.25990547337954190629202639354e-1", "2.4777972988945588795255986985e-1", "5.54475065257595660894431634497e-1"),  # -0.75
    ("4.75728091610539588798643778281e-1", "-2.04081670339547386144817201795e-1", "3.80352659751053850169712493726e-1", "5.05933713623847166570260437897e-1"),  # -0.5
    ("4.18724614275452924228381157692e-1", "-2.46389189920175973028684977158e-1", "5.01399873469233388967485780228e-1", "4.65151488337153703270672963111e-1"),  # -0.25
    ("3.55028053887817239260063186004e-1", "-2.58819403792806798405183560189e-1", "6.14926627446000735150922369094e-1", "4.48288357353826357914823710399e-1"),  # 0.0
    ("2.91163954348545206272107194187e-1", "-2.49062112004897141803722200168e-1", "7.28746903936215007869454318181e-1", "4.69861193767959356545190782284e-1"),  # 0.25
    ("2.3169360648083348976912525451e-1", "-2.24910532664683893135996990329e-1", "8.54277043103155493300048798795e-1", "5.44572564140592301827164018218e-1"),  # 0.5
    ("1.79336305478645233614976377518e-1", "-1.93175208104376456281375897102e-1", "1.00693090863321636624223310041", "6.90299702736886219640542389775e-1"),  # 0.75
    ("1.35292416312881415524147423515e-1", "-1.59147441296793212787500252497e-1", "1.20742359495287125943637881703", "9.32435933392775632959451453674e-1"),  # 1.0
    ("9.96445447569166714746010189624e-2", "-1.26486620685389377218292315898e-1", "1.48438827549510612118230153794", "1.31020348128330095051658047101"),  # 1.25
    ("7.17494970081054096735554164897e-2", "-9.73820128423013192184842182024e-2", "1.87894150374789500090933504948", "1.88621225484816548869234702403"),  # 1.5
    ("5.05698808057948716448452364189e-2", "-7.28537137620283852552236705236e-2", "2.45227069449605956566782144961", "2.76158173036392008086269205392"),  # 1.75
    ("3.49241304232743791353220807918e-2", "-5.30903844336536317039991858787e-2", "3.29809499997821471028060442522", "4.10068204993288988938203407918"),  # 2.0
    ("2.36546585577474462068750662759e-2", "-3.77585709920185131263171874809e-2", "4.56320583124832494060441973799", "6.17255812409883130845872085943"),  # 2.25
    ("1.57259233804704899952660465408e-2", "-2.62508810359032303648954962972e-2", "6.48166073846057860807261295749", "9.42142331733430175558230888573"),  # 2.5
    ("1.02692098550119875226394714998e-2", "-1.78640937722944752909551905237e-2", "9.43237902646508602081381505795", "1.45881703533479720283022711771e+1"),  # 2.75
    ("6.59113935746071914425744840796e-3", "-1.1912976705951318473763232593e-2", "1.40373289637302320317402673138e+1", "2.29222149663821701851047310433e+1"),  # 3.0
    ("4.16045461811725644971445404176e-3", "-7.79268792679072111947596528336e-3", "2.13309049507475610798691294987e+1", "3.65548514925042353842070342429e+1"),  # 3.25
    ("2.5840987869896349632771447833e-3", "-5.00441396795258283203024967884e-3", "3.30555067546114794142573129819e+1", "5.91643195813609870345742121795e+1"),  # 3.5
    ("1.58007171792101325784571913825e-3", "-3.15751475323978419203009629277e-3", "5.21832384814703575758865238812e+1", "9.71731466776328787905522235454e+1"),  # 3.75
    ("9.515638512048018736214999689e-4", "-1.95864095020417890013814091841e-3", "8.3847071408468139922580490461e+1", "1.61926683504613401843094924285e+2"),  # 4.0
    ("5.64639835342501337781926793964e-4", "-1.19520513454491430440770813207e-3", "1.37021345991334303983063373995e+2", "2.73698843474177624091551516851e+2"),  # 4.25
    ("3.30250323514308983658732590099e-4", "-7.17866567557508888693554298467e-4", "2.27588081835599718461410886054e+2", "4.69135077327966397950919677145e+2"),  # 4.5
    ("1.90461459268160512723821714755e-4", "-4.24592689456562082797954267697e-4", "3.83993058148824145828817125495e+2", "8.15226563360095974309827934844e+2"),  # 4.75
    ("1.08344428136074417349865025033e-4", "-2.47413890868462476000236172063e-4", "6.57792044171171182441080578874e+2", "1.435819080217982518671721238e+3"),  # 5.0
    ("6.081011452242365287333986492e-5", "-1.4209461719726815761018510259e-4", "1.14352641611991632464314926502e+3", "2.56241809531222658926833181271e+3"),  # 5.25
    ("3.36853119085998144252897340569e-5", "-8.04633913055651433796707550577e-5", "2.01658003865953139444100950694e+3", "4.6325537331390424204540229138e+3"),  # 5.5
    ("1.84212461977302458206321016737e-5", "-4.4940621222983480628743454436e-5", "3.60604590665499942203858349353e+3", "8.48215920372264030033218682074e+3"),  # 5.75
    ("9.94769436025288957023884766883e-6", "-2.4765200397034954754181825387e-5", "6.53644610480986345375835002462e+3", "1.57256026219304768394203229573e+4"),  # 6.0
    ("5.30586174875208102632270893745e-6", "-1.3469113451450983439149445431e-5", "1.20062221974605592519353590248e+4", "2.95139083334947869108123241073e+4"),  # 6.25
    ("2.79588234320491358545999574881e-6", "-7.23193146660179255981424883776e-6", "2.234060771839699815794499069e+4", "5.60624958425228607482191003315e+4"),  # 6.5
    ("1.45581274457887586899823208611e-6", "-3.83445574094993423865867874043e-6", "4.21003794867269370575310158748e+4", "1.07759631140006198400770123139e+5"),  # 6.75
    ("7.4921288639971670807710402721e-7", "-2.00815089473879199116930531207e-6", "8.03277907094302470053912113986e+4", "2.0955267087397131950596281237e+5"),  # 7.0
    ("3.81156301833737761079749256258e-7", "-1.03904629462802573522830746136e-6", "1.55141432627503097583959884409e+5", "4.12195088243438151188321285184e+5"),  # 7.25
    ("1.91725606751343075164500289893e-7", "-5.31271395972054468478954428041e-7", "3.03229615112533402293830591306e+5", "8.19987835358799620932082974419e+5"),  # 7.5
    ("9.53703896164158522367261761205e-8", "-2.68492886795326185979427954761e-7", "5.99656629006006837383052212757e+5", "1.64942543916101649755309898499e+6"),  # 7.75
    ("4.69220761609923162564908170349e-8", "-1.34143929790678657429115370793e-7", "1.1995860041244599308816544996e+6", "3.35434231274453887650774649653e+6"),  # 8.0
    ("2.28371394448222817092372648045e-8", "-6.62695266698763122821707620711e-8", "2.42701845612287361623940564723e+6", "6.89545738676901593461028297115e+6"),  # 8.25
    ("1.09970097551955065094906290807e-8", "-3.2377254404476022558942372987e-8", "4.96531954147130198106395439084e+6", "1.43263010306620583341690601864e+7"),  # 8.5
    ("5.24011423189175241919810542673e-9", "-1.56467620275779490937221971514e-8", "1.02701594744392970674755890995e+7", "3.00785704141153356800506518898e+7"),  # 8.75
    ("2.47116843087248984328924113434e-9", "-7.48064138965894641275954527342e-9", "2.14728688914353490933681288111e+7", "6.38074897809082138545135336777e+7"),  # 9.0
    ("1.15350415572834016084003363003e-9", "-3.53876331046563488651664336192e-9", "4.53749572901972674178124527087e+7", "1.36747363525272086344924015496e+8"),  # 9.25
    ("5.33026370461749162658548666952e-10", "-1.65663945937406662625875893522e-9", "9.6892265580451092832224732058e+7", "2.9603476386800503866649684368e+8"),  # 9.5
    ("2.43863213572284707904829601616e-10", "-7.67593065186179304943039670906e-10", "2.09047523576996289525210949549e+8", "6.47274570360551532201957341458e+8"),  # 9.75
    ("1.1047532552898685933550205658e-10", "-3.52063367673892363662064482528e-10", "4.55641153548225140999787308106e+8", "1.42923613448286577611883144781e+9"),  # 10.0
    ("4.95629475832072055878506047406e-11", "-1.5986566930908707294155638905e-10", "1.00314634380987580356894758352e+9", "3.18667940905868464584294950612e+9"),  # 10.25
    ("2.20227451928340164353030439636e-11", "-7.18769678145156709133785297834e-11", "2.2305544411366952291506515527e+9", "7.17369224528329918014360087229e+9"),  # 10.5
    ("9.69295587966877166568231058025e-12", "-3.20020614105363326668195124663e-11", "5.00857802553980736156295523025e+9", "1.63030830422394316092123099952e+10"),  # 10.75
    ("4.2262758649603595912988354508e-12", "-1.41114412466285173354511912715e-11", "1.13557825304304762851362362339e+10", "3.74001681969269770152830093349e+10"),  # 11.0
    ("1.82566517433546945656769261317e-12", "-6.16339070651222968379897141821e-12", "2.59938445606141637915175624771e+10", "8.65983907755293287421058871002e+10"),  # 11.25
    ("7.81429018396285434613029758793e-13", "-2.66667996750453140590106962216e-12", "6.00656801588960365604649436394e+10", "2.02365072766383857449200149526e+11"),  # 11.5
    ("3.3144015730515567889828239608e-13", "-1.14306596797140152267597936942e-12", "1.40099954396612350040912207608e+11", "4.77209513429763949933883807006e+11"),  # 11.75
    ("1.3931846888753608390490345032e-13", "-4.8547365549853084629936539977e-13", "3.29807225829074176184768111824e+11", "1.13550750244337074240432409046e+12"),  # 12.0
    ("5.80416563052713746668119933259e-14", "-2.04313627353862252042574672621e-13", "7.83518537257408613582677184176e+11", "2.72608298608058581836484108165e+12"),  # 12.25
    ("2.39682782607804993628166893941e-14", "-8.52134656467385644529697724955e-14", "1.87829193562205186740249309218e+12", "6.60264868136429539057669098975e+12"),  # 12.5
    ("9.81153834601054064698707353998e-15", "-3.52240243515848837246850038483e-14", "4.54318821853746374629453383591e+12", "1.6132079206983049336106385561e+13"),  # 12.75
    ("3.98177607883333536302254707876e-15", "-1.44320805739726260444811202046e-14", "1.10867067190594047471292241856e+13", "3.97575449699083454036751723178e+13"),  # 13.0
    ("1.60210599791143230752328434811e-15", "-5.86160219375088633525223456483e-15", "2.72929300448210722599908414102e+13", "9.88259127458374204995308343646e+13"),  # 13.25
    ("6.39167387674186665067872025336e-16", "-2.36014254392431128543965043638e-15", "6.77744902657079072208034168203e+13", "2.47747978649419038606205910471e+14"),  # 13.5
    ("2.52860073992681490093485347564e-16", "-9.42172935868171006577352368767e-16", "1.69751906600367157632693091005e+14", "6.26331517950465380116051082826e+14"),  # 13.75
    ("9.92020549119237726631733288213e-17", "-3.72931011001790067971342465283e-16", "4.2880536178653414953766835219e+14", "1.59669141158800278859514865554e+15"),  # 14.0
    ("3.85982355834015300679213155625e-17", "-1.46374648858816640646694087779e-16", "1.09236738943057766937666787403e+15", "4.1042029703345077929306949993e+15"),  # 14.25
    ("1.48953745496592719529803929895e-17", "-5.69738820618578061066517768057e-17", "2.80612483200504044275263899489e+15", "1.06364603606365231375671236716e+16"),  # 14.5
    ("5.70167735318433657353881189277e-18", "-2.19933069113348146755277776495e-17", "7.26846415548510032929202898648e+15", "2.77904752273778909600440642268e+16"),  # 14.75
    ("2.16496252073799229898945403881e-18", "-8.42056795401777276612439280684e-18", "1.89820995674935896847895266258e+16", "7.31974920340701049618887771814e+16"),  # 15.0
    ("8.15498659431440187362709625997e-19", "-3.19785600111186962744426734684e-18", "4.99782575768472682361866810027e+16", "1.94343195336520354086970620911e+17"),  # 15.25
    ("3.04753815245601268417378651625e-19", "-1.20468320445344374227219128578e-18", "1.3265492278009282769181178376e+17", "5.2010088403587950167622992622e+17"),  # 15.5
    ("1.12993986591434737448647156829e-19", "-4.50207018980517747878458715377e-19", "3.54929343177794182928144426975e+17", "1.40289062652665902967886335855e+18"),  # 15.75
    ("4.15688882891702439474793761918e-20", "-1.66918867683818095591593412815e-19", "9.5721239060491865258438081149e+17", "3.81374350712186265587714471244e+18"),  # 16.0
)
