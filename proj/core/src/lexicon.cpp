#include "blockkit/lexicon.hpp"

namespace blockkit {

namespace {

constexpr std::string_view kForenames[] = {
    "GERD", "HANS", "PETER", "KLAUS", "JÜRGEN", "DIETER", "WOLFGANG", "MICHAEL", "WERNER",
    "HORST", "HEINZ", "MANFRED", "UWE", "GÜNTER", "HELMUT", "THOMAS", "ANDREAS", "BERND",
    "KARL", "FRANK", "HERBERT", "WALTER", "JOACHIM", "KURT", "ROLF", "NORBERT", "RAINER",
    "STEFAN", "MARTIN", "WILHELM", "GERHARD", "ALFRED", "HARALD", "CHRISTIAN", "MATTHIAS",
    "HEINRICH", "RUDOLF", "VOLKER", "REINHARD", "ERICH", "FRIEDRICH", "ALEXANDER", "LOTHAR",
    "MARKUS", "ERNST", "WILLI", "JOSEF", "OTTO", "DANIEL", "HARTMUT", "SIEGFRIED", "ARMIN",
    "ERWIN", "DIRK", "HEINO", "OLIVER", "JOERG", "HELFRIED", "HUBERT", "TOBIAS", "JAN",
    "EGON", "BRUNO", "HUGO", "FELIX", "MAX", "PAUL", "OSKAR", "EMIL", "ANTON", "THEODOR",
    "ALBERT", "RICHARD", "ROBERT", "ARTHUR", "HERMANN", "EDUARD", "GUSTAV", "FERDINAND",
    "LEOPOLD", "AUGUST", "JOHANN", "JAKOB", "GEORG", "KONRAD", "LUDWIG", "ADAM", "SIMON",
    "DAVID", "BENJAMIN", "SAMUEL", "JONAS", "FLORIAN", "FABIAN", "SEBASTIAN", "DOMINIK",
    "PHILIPP", "LUKAS", "MORITZ", "TIM", "NIKLAS", "PASCAL", "MARCO", "SVEN", "LARS",
    "TORSTEN", "CARSTEN", "HOLGER", "INGO", "AXEL", "HENNING", "DETLEF", "WINFRIED",
    "BURKHARD", "EBERHARD", "GOTTFRIED", "HELLMUT", "ROLAND", "ADOLF", "BALDUR", "CLEMENS",
    "DAMIAN", "EMMERICH", "FALK", "GREGOR", "HARTWIG", "IMMO", "JOCHEN", "KASPAR",
    "LEONHARD", "MEINHARD", "NIKOLAUS", "OSWALD", "RAIMUND", "SIGMUND", "TILL", "ULRICH",
    "VINZENZ", "WENDEL", "XAVER", "BARTHOLOMÄUS", "CORNELIUS", "ANNA", "MARIA", "URSULA",
    "MONIKA", "PETRA", "ELISABETH", "SABINE", "RENATE", "HELGA", "KARIN", "BRIGITTE",
    "INGRID", "ERIKA", "ANDREA", "GISELA", "CLAUDIA", "SUSANNE", "GABRIELE", "CHRISTA",
    "CHRISTINE", "HILDEGARD", "BARBARA", "STEFANIE", "IRMGARD", "MARTINA", "HEIKE",
    "ELKE", "MARION", "RUTH", "ANGELIKA", "BIRGIT", "HANNELORE", "SILKE", "ANJA", "JUTTA",
    "INGE", "ILSE", "ANNETTE", "CORNELIA", "DORIS", "EDITH", "ANITA", "BETTINA", "REGINA",
    "ANNELIESE", "CHARLOTTE", "HELLA", "JOHANNA", "KATHARINA", "MARGARETE", "MARGOT",
    "MARLIES", "ROSEMARIE", "SIGRID", "WALTRAUD", "GERDA", "GERTRUD", "HEDWIG", "HERTA",
    "IRENE", "KÄTHE", "LIESELOTTE", "LUISE", "MAGDALENA", "MARIANNE", "MARTHA", "OLGA",
    "PAULA", "SELMA", "THERESE", "VERONIKA", "WILHELMINE", "AGNES", "BERTA", "CLARA",
    "DOROTHEA", "ELFRIEDE", "EMMA", "FRIEDA", "GRETE", "HANNA", "IDA", "JULIA", "KLARA",
    "LENA", "MARIE", "NICOLE", "SANDRA", "TANJA", "VERA", "WIEBKE", "ANTJE", "BEATE",
    "CARMEN", "DAGMAR", "EDELTRAUD", "FRANZISKA", "GUDRUN", "HENRIETTE", "ISOLDE",
    "JOSEFINE", "KERSTIN", "LYDIA", "MECHTHILD", "NADINE", "OTTILIE", "PAULINE",
    "ROSWITHA", "SILVIA", "TRAUTE", "ULRIKE", "VALESKA", "WALBURGA", "KRISTIN", "MELANIE",
    "SONJA", "YVONNE", "DANIELA", "KATRIN", "MANUELA", "SABRINA", "ALEXANDRA", "CAROLA",
    "DIANA", "EVELYN", "FRIEDERIKE", "GRETEL", "HILDE", "INES", "JANINA", "KORNELIA",
    "LISBETH", "MIRIAM", "NORA", "ORTRUD", "PIA", "RICARDA", "SIBYLLE", "THEA", "UTE",
    "VIOLA", "WANDA", "JOHN", "JAMES", "WILLIAM", "GEORGE", "CHARLES", "HENRY", "EDWARD",
    "THOMASINA", "ALICE", "MARGARET", "CATHERINE", "ELEANOR", "FLORENCE", "HARRIET",
    "JOSEPHINE", "LUCY", "MABEL", "NELLIE", "OLIVE", "PEARL", "ROSE", "STELLA", "VIOLET",
    "WINIFRED", "ALBERTINE", "BEATRICE", "CECILIA", "DELIA", "EDNA", "FANNY", "GRACE",
    "HAZEL", "IRIS", "JANE", "KATE", "LILLIAN", "MAUDE", "NORMA", "OPAL", "PHOEBE",
    "RHODA", "SYLVIA", "THELMA", "UNA", "VIRGINIA", "WILMA", "ARNOLD", "BERNHARD",
    "CHRISTOPH", "DIETMAR", "ECKHARD", "FRIEDHELM", "GEROLD", "HANSJÖRG", "IGNAZ",
    "JULIUS", "KARSTEN", "LEANDER", "MAGNUS", "NICO", "OTMAR", "PIRMIN", "QUIRIN",
    "RUPERT", "STEFFEN", "THILO", "UDO", "VEIT", "WALDEMAR", "YANNICK", "ZACHARIAS",
    "ADELHEID", "BRUNHILDE", "CHRISTEL", "DOROTHEE", "ELSBETH", "FELICITAS", "GRETCHEN",
    "HELENE", "IRMTRAUD", "JETTE", "KUNIGUNDE", "LORE", "MINNA", "NANETTE", "OTTILIA",
    "PERPETUA", "RENATA", "SOPHIE", "TRUDE", "URSEL", "VIKTORIA", "WILTRUD", "ANNEGRET",
    "BÄRBEL", "CHRISTIANE", "DÖRTE", "ELFI", "FRAUKE", "GESINE", "HEIDRUN", "ILKA",
    "JASMIN", "KIRSTEN", "LIANE", "MAREIKE", "NELE", "OLIVIA", "PATRICIA", "ROMY",
    "SWANTJE", "THERESIA", "UTA", "VANESSA", "WENKE", "XENIA", "YVETTE", "ZITA",
};

constexpr std::string_view kSurnames[] = {
    "MÜLLER", "SCHMIDT", "SCHNEIDER", "FISCHER", "WEBER", "MEYER", "WAGNER", "BECKER",
    "SCHULZ", "HOFFMANN", "SCHÄFER", "KOCH", "BAUER", "RICHTER", "KLEIN", "WOLF",
    "SCHRÖDER", "NEUMANN", "SCHWARZ", "ZIMMERMANN", "BRAUN", "KRÜGER", "HOFMANN",
    "HARTMANN", "LANGE", "SCHMITT", "WERNER", "SCHMITZ", "KRAUSE", "MEIER", "LEHMANN",
    "SCHMID", "SCHULZE", "MAIER", "KÖHLER", "HERRMANN", "KÖNIG", "WALTER", "MAYER",
    "HUBER", "KAISER", "FUCHS", "PETERS", "LANG", "SCHOLZ", "MÖLLER", "WEISS", "JUNG",
    "HAHN", "SCHUBERT", "VOGEL", "FRIEDRICH", "KELLER", "GÜNTHER", "FRANK", "BERGER",
    "WINKLER", "ROTH", "BECK", "LORENZ", "BAUMANN", "FRANKE", "ALBRECHT", "SCHUSTER",
    "SIMON", "LUDWIG", "BÖHM", "WINTER", "KRAFT", "MARTIN", "SCHUMACHER", "KRÄMER",
    "VOGT", "STEIN", "JÄGER", "OTTO", "SOMMER", "GROSS", "SEIDEL", "HEINRICH", "BRANDT",
    "HAAS", "SCHREIBER", "GRAF", "SCHULTE", "DIETRICH", "ZIEGLER", "KUHN", "KÜHN",
    "POHL", "ENGEL", "HORN", "BUSCH", "BERGMANN", "THOMAS", "VOIGT", "SAUER", "ARNOLD",
    "WOLFF", "PFEIFFER", "SPERLING", "BRINKMANN", "SCHLOSSER", "HEILMANN", "RIEDEL",
    "KESSLER", "EHLERS", "EBERT", "GEIGER", "WENZEL", "BUCHHOLZ", "FIEDLER", "GARBE",
    "HENKEL", "KIRCHNER", "KRAMER", "LENZ", "MARX", "NAGEL", "OPITZ", "PAULSEN",
    "REINHARDT", "SEIFERT", "THIEL", "UHLIG", "VETTER", "WESTPHAL", "ZANDER", "AHRENS",
    "BARTELS", "CONRAD", "DITTRICH", "EGGERT", "FINKE", "GERLACH", "HAUPT", "ISERMANN",
    "JANSEN", "KNAPP", "LINDEMANN", "METZGER", "NOACK", "OSTERMANN", "PETERSEN",
    "QUANDT", "RUDOLPH", "STAHL", "THIELE", "ULRICH", "VOLKMANN", "WICHMANN", "ZENTNER",
    "ACKERMANN", "BALDAUF", "CARSTENS", "DANNENBERG", "EICHHORN", "FALKNER", "GEBHARDT",
    "HASENKAMP", "ILGNER", "JOST", "KALTENBACH", "LAMPRECHT", "MERKEL", "NIEMEYER",
    "OBERMEIER", "PREUSS", "QUAST", "REIMANN", "STOLZE", "TRAUTMANN", "UNGER",
    "VOLLMER", "WIEGAND", "ZÖLLNER", "APPEL", "BIRNBAUM", "CZERNY", "DREWS", "ENDLICH",
    "FROMMHOLD", "GRUNWALD", "HELLWIG", "IMHOFF", "JUNGHANS", "KLINGER", "LIPPERT",
    "MOHR", "NEUBERT", "OESTREICH", "PLATH", "RADEMACHER", "STEINBACH", "TIEDEMANN",
    "UECKER", "VON BERG", "WALLNER", "ZUCKER", "ADLER", "BINDER", "CLAUSEN", "DORN",
    "EKKEHARD", "FREITAG", "GOLDSCHMIDT", "HEIDENREICH", "ISENBERG", "JAHNKE",
    "KELLERMANN", "LOOS", "MICHAELIS", "NOWAK", "OELSNER", "PABST", "REUTER", "SANDER",
    "TESCHNER", "UNTERBERG", "VOSS", "WEIDNER", "ZAHN", "AMANN", "BODE", "CHRIST",
    "DENGLER", "ESSER", "FÖRSTER", "GATZKE", "HÜBNER", "IRRGANG", "JORDAN", "KOLBE",
    "LÖFFLER", "MENZEL", "NIKOLAUS", "OSWALD", "PILZ", "RÖMER", "STANGE", "TAUBE",
    "URBAN", "VIEWEG", "WUNDERLICH", "ZIRKEL", "SMITH", "JOHNSON", "BROWN", "TAYLOR",
    "ANDERSON", "WILSON", "THOMPSON", "MARTINEZ", "ROBINSON", "CLARK", "RODRIGUEZ",
    "LEWIS", "LEE", "WALKER", "HALL", "ALLEN", "YOUNG", "HERNANDEZ", "KING", "WRIGHT",
    "LOPEZ", "HILL", "SCOTT", "GREEN", "ADAMS", "BAKER", "GONZALEZ", "NELSON", "CARTER",
    "MITCHELL", "PEREZ", "ROBERTS", "TURNER", "PHILLIPS", "CAMPBELL", "PARKER", "EVANS",
    "EDWARDS", "COLLINS", "STEWART", "SANCHEZ", "MORRIS", "ROGERS", "REED", "COOK",
    "MORGAN", "BELL", "MURPHY", "BAILEY", "RIVERA", "COOPER", "RICHARDSON", "COX",
    "HOWARD", "WARD", "TORRES", "PETERSON", "GRAY", "RAMIREZ", "JAMES", "WATSON",
    "BROOKS", "KELLY", "SANDERS", "PRICE", "BENNETT", "WOOD", "BARNES", "ROSS",
    "HENDERSON", "COLEMAN", "JENKINS", "PERRY", "POWELL", "LONG", "PATTERSON",
    "HUGHES", "FLORES", "WASHINGTON", "BUTLER", "SIMMONS", "FOSTER", "GONZALES",
    "BRYANT", "ALEXANDER", "RUSSELL", "GRIFFIN", "DIAZ", "HAYES", "MYERS", "FORD",
    "HAMILTON", "GRAHAM", "SULLIVAN", "WALLACE", "WOODS", "COLE", "WEST", "OWENS",
    "REYNOLDS", "FISHER", "ELLIS", "HARRISON", "GIBSON", "MCDONALD", "CRUZ", "MARSHALL",
    "ORTIZ", "GOMEZ", "MURRAY", "FREEMAN", "WELLS", "WEBB", "SIMPSON", "STEVENS",
    "TUCKER", "PORTER", "HUNTER", "HICKS", "CRAWFORD", "HENRY", "BOYD", "MASON",
    "MORALES", "KENNEDY", "WARREN", "DIXON", "RAMOS", "REYES", "BURNS", "GORDON",
    "SHAW", "HOLMES", "RICE", "ROBERTSON", "HUNT", "BLACK", "DANIELS", "PALMER",
    "MILLS", "NICHOLS", "GRANT", "KNIGHT", "FERGUSON", "ROSE", "STONE", "HAWKINS",
    "DUNN", "PERKINS", "HUDSON", "SPENCER", "GARDNER", "STEPHENS", "PAYNE", "PIERCE",
    "BERRY", "MATTHEWS", "ARNDT", "WAGENER", "GREENE", "LANE", "HARPER", "FOX",
    "RILEY", "ARMSTRONG", "CARPENTER", "WEAVER", "GREENWOOD", "LAWRENCE", "ELLIOTT",
    "CHAMBERS", "SIMS", "AUSTIN", "PETERSSEN", "LAMBERT", "BRYAN", "HOLLAND", "TERRY",
    "HOLT", "WADE", "BATES", "LUCAS", "FIELDS", "WOLFE", "HENSLEY", "SCHROEDER",
    "LINDGREN", "BERGSTRÖM", "NORDQVIST", "ÅKESSON", "SJÖBERG", "LUNDGREN",
};

constexpr std::string_view kCities[] = {
    "BERLIN", "HAMBURG", "MUNICH", "COLOGNE", "FRANKFURT", "STUTTGART", "DORTMUND",
    "ESSEN", "LEIPZIG", "BREMEN", "DRESDEN", "HANNOVER", "NUREMBERG", "DUISBURG",
    "BOCHUM", "WUPPERTAL", "BIELEFELD", "BONN", "MANNHEIM", "KARLSRUHE", "AUGSBURG",
    "WIESBADEN", "KIEL", "ROSTOCK", "KASSEL", "POTSDAM", "MAINZ", "LÜBECK", "ERFURT",
    "OBERHAUSEN", "KREFELD", "AACHEN", "MAGDEBURG", "FREIBURG", "HALLE", "MÜNSTER",
    "REGENSBURG", "WÜRZBURG", "GÖTTINGEN", "HEIDELBERG", "TRIER", "JENA", "ULM",
    "KOBLENZ", "SIEGEN", "COTTBUS", "BAMBERG", "BAYREUTH", "LANDSHUT", "PASSAU",
    "KONSTANZ", "WEIMAR", "FULDA", "GIESSEN", "MARBURG", "TÜBINGEN", "DARMSTADT",
    "OFFENBACH", "PFORZHEIM", "REUTLINGEN", "SALZGITTER", "WOLFSBURG", "GÖPPINGEN",
    "ESSLINGEN", "LUDWIGSBURG", "VILLINGEN", "EMDEN", "OLDENBURG", "OSNABRÜCK",
    "PADERBORN", "RECKLINGHAUSEN", "REMSCHEID", "SOLINGEN", "LEVERKUSEN", "NEUSS",
    "HERNE", "HAGEN", "HAMM", "MOERS", "VIERSEN", "GLADBECK", "DETMOLD", "LÜNEBURG",
    "CELLE", "GOSLAR", "HILDESHEIM", "WILHELMSHAVEN", "CUXHAVEN", "FLENSBURG",
    "NEUMÜNSTER", "ITZEHOE", "SCHWERIN", "STRALSUND", "GREIFSWALD", "NEUBRANDENBURG",
    "GERA", "ZWICKAU", "CHEMNITZ", "PLAUEN", "GÖRLITZ", "DESSAU", "STENDAL",
    "BRANDENBURG", "EBERSWALDE", "ORANIENBURG", "FÜRTH", "ERLANGEN", "INGOLSTADT",
    "ROSENHEIM", "KEMPTEN", "MEMMINGEN", "ASCHAFFENBURG", "SCHWEINFURT", "HOF",
    "WEIDEN", "STRAUBING", "DEGGENDORF", "TRAUNSTEIN", "GARMISCH", "LINDAU",
};

}  // namespace

std::span<const std::string_view> forename_pool() { return kForenames; }
std::span<const std::string_view> surname_pool() { return kSurnames; }
std::span<const std::string_view> city_pool() { return kCities; }

}  // namespace blockkit
