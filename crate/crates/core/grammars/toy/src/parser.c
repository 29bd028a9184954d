/* Automatically @generated by tree-sitter */

#include "tree_sitter/parser.h"

#if defined(__GNUC__) || defined(__clang__)
#pragma GCC diagnostic ignored "-Wmissing-field-initializers"
#endif

#define LANGUAGE_VERSION 15
#define STATE_COUNT 51
#define LARGE_STATE_COUNT 6
#define SYMBOL_COUNT 35
#define ALIAS_COUNT 0
#define TOKEN_COUNT 19
#define EXTERNAL_TOKEN_COUNT 0
#define FIELD_COUNT 2
#define MAX_ALIAS_SEQUENCE_LENGTH 6
#define MAX_RESERVED_WORD_SET_SIZE 0
#define PRODUCTION_ID_COUNT 2
#define SUPERTYPE_COUNT 0

enum ts_symbol_identifiers {
  sym_identifier = 1,
  anon_sym_LPAREN = 2,
  anon_sym_COMMA = 3,
  anon_sym_RPAREN = 4,
  anon_sym_SEMI = 5,
  anon_sym_void = 6,
  anon_sym_int = 7,
  anon_sym_char = 8,
  anon_sym_float = 9,
  anon_sym_bool = 10,
  anon_sym_LBRACK = 11,
  anon_sym_RBRACK = 12,
  anon_sym_LT = 13,
  anon_sym_PIPE = 14,
  anon_sym_GT = 15,
  anon_sym_LBRACE = 16,
  anon_sym_RBRACE = 17,
  sym_number = 18,
  sym_source_file = 19,
  sym__item = 20,
  sym_function_declaration = 21,
  sym_type = 22,
  sym_list = 23,
  sym_sequence = 24,
  sym_block = 25,
  sym_sexp = 26,
  sym__atom = 27,
  sym__element = 28,
  aux_sym_source_file_repeat1 = 29,
  aux_sym_function_declaration_repeat1 = 30,
  aux_sym_list_repeat1 = 31,
  aux_sym_sequence_repeat1 = 32,
  aux_sym_block_repeat1 = 33,
  aux_sym_sexp_repeat1 = 34,
};

static const char * const ts_symbol_names[] = {
  [ts_builtin_sym_end] = "end",
  [sym_identifier] = "identifier",
  [anon_sym_LPAREN] = "(",
  [anon_sym_COMMA] = ",",
  [anon_sym_RPAREN] = ")",
  [anon_sym_SEMI] = ";",
  [anon_sym_void] = "void",
  [anon_sym_int] = "int",
  [anon_sym_char] = "char",
  [anon_sym_float] = "float",
  [anon_sym_bool] = "bool",
  [anon_sym_LBRACK] = "[",
  [anon_sym_RBRACK] = "]",
  [anon_sym_LT] = "<",
  [anon_sym_PIPE] = "|",
  [anon_sym_GT] = ">",
  [anon_sym_LBRACE] = "{",
  [anon_sym_RBRACE] = "}",
  [sym_number] = "number",
  [sym_source_file] = "source_file",
  [sym__item] = "_item",
  [sym_function_declaration] = "function_declaration",
  [sym_type] = "type",
  [sym_list] = "list",
  [sym_sequence] = "sequence",
  [sym_block] = "block",
  [sym_sexp] = "sexp",
  [sym__atom] = "_atom",
  [sym__element] = "_element",
  [aux_sym_source_file_repeat1] = "source_file_repeat1",
  [aux_sym_function_declaration_repeat1] = "function_declaration_repeat1",
  [aux_sym_list_repeat1] = "list_repeat1",
  [aux_sym_sequence_repeat1] = "sequence_repeat1",
  [aux_sym_block_repeat1] = "block_repeat1",
  [aux_sym_sexp_repeat1] = "sexp_repeat1",
};

static const TSSymbol ts_symbol_map[] = {
  [ts_builtin_sym_end] = ts_builtin_sym_end,
  [sym_identifier] = sym_identifier,
  [anon_sym_LPAREN] = anon_sym_LPAREN,
  [anon_sym_COMMA] = anon_sym_COMMA,
  [anon_sym_RPAREN] = anon_sym_RPAREN,
  [anon_sym_SEMI] = anon_sym_SEMI,
  [anon_sym_void] = anon_sym_void,
  [anon_sym_int] = anon_sym_int,
  [anon_sym_char] = anon_sym_char,
  [anon_sym_float] = anon_sym_float,
  [anon_sym_bool] = anon_sym_bool,
  [anon_sym_LBRACK] = anon_sym_LBRACK,
  [anon_sym_RBRACK] = anon_sym_RBRACK,
  [anon_sym_LT] = anon_sym_LT,
  [anon_sym_PIPE] = anon_sym_PIPE,
  [anon_sym_GT] = anon_sym_GT,
  [anon_sym_LBRACE] = anon_sym_LBRACE,
  [anon_sym_RBRACE] = anon_sym_RBRACE,
  [sym_number] = sym_number,
  [sym_source_file] = sym_source_file,
  [sym__item] = sym__item,
  [sym_function_declaration] = sym_function_declaration,
  [sym_type] = sym_type,
  [sym_list] = sym_list,
  [sym_sequence] = sym_sequence,
  [sym_block] = sym_block,
  [sym_sexp] = sym_sexp,
  [sym__atom] = sym__atom,
  [sym__element] = sym__element,
  [aux_sym_source_file_repeat1] = aux_sym_source_file_repeat1,
  [aux_sym_function_declaration_repeat1] = aux_sym_function_declaration_repeat1,
  [aux_sym_list_repeat1] = aux_sym_list_repeat1,
  [aux_sym_sequence_repeat1] = aux_sym_sequence_repeat1,
  [aux_sym_block_repeat1] = aux_sym_block_repeat1,
  [aux_sym_sexp_repeat1] = aux_sym_sexp_repeat1,
};

static const TSSymbolMetadata ts_symbol_metadata[] = {
  [ts_builtin_sym_end] = {
    .visible = false,
    .named = true,
  },
  [sym_identifier] = {
    .visible = true,
    .named = true,
  },
  [anon_sym_LPAREN] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_COMMA] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_RPAREN] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_SEMI] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_void] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_int] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_char] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_float] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_bool] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_LBRACK] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_RBRACK] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_LT] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_PIPE] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_GT] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_LBRACE] = {
    .visible = true,
    .named = false,
  },
  [anon_sym_RBRACE] = {
    .visible = true,
    .named = false,
  },
  [sym_number] = {
    .visible = true,
    .named = true,
  },
  [sym_source_file] = {
    .visible = true,
    .named = true,
  },
  [sym__item] = {
    .visible = false,
    .named = true,
  },
  [sym_function_declaration] = {
    .visible = true,
    .named = true,
  },
  [sym_type] = {
    .visible = true,
    .named = true,
  },
  [sym_list] = {
    .visible = true,
    .named = true,
  },
  [sym_sequence] = {
    .visible = true,
    .named = true,
  },
  [sym_block] = {
    .visible = true,
    .named = true,
  },
  [sym_sexp] = {
    .visible = true,
    .named = true,
  },
  [sym__atom] = {
    .visible = false,
    .named = true,
  },
  [sym__element] = {
    .visible = false,
    .named = true,
  },
  [aux_sym_source_file_repeat1] = {
    .visible = false,
    .named = false,
  },
  [aux_sym_function_declaration_repeat1] = {
    .visible = false,
    .named = false,
  },
  [aux_sym_list_repeat1] = {
    .visible = false,
    .named = false,
  },
  [aux_sym_sequence_repeat1] = {
    .visible = false,
    .named = false,
  },
  [aux_sym_block_repeat1] = {
    .visible = false,
    .named = false,
  },
  [aux_sym_sexp_repeat1] = {
    .visible = false,
    .named = false,
  },
};

enum ts_field_identifiers {
  field_name = 1,
  field_result = 2,
};

static const char * const ts_field_names[] = {
  [0] = NULL,
  [field_name] = "name",
  [field_result] = "result",
};

static const TSMapSlice ts_field_map_slices[PRODUCTION_ID_COUNT] = {
  [1] = {.index = 0, .length = 2},
};

static const TSFieldMapEntry ts_field_map_entries[] = {
  [0] =
    {field_name, 1},
    {field_result, 0},
};

static const TSSymbol ts_alias_sequences[PRODUCTION_ID_COUNT][MAX_ALIAS_SEQUENCE_LENGTH] = {
  [0] = {0},
};

static const uint16_t ts_non_terminal_alias_map[] = {
  0,
};

static const TSStateId ts_primary_state_ids[STATE_COUNT] = {
  [0] = 0,
  [1] = 1,
  [2] = 2,
  [3] = 3,
  [4] = 4,
  [5] = 5,
  [6] = 6,
  [7] = 7,
  [8] = 8,
  [9] = 9,
  [10] = 10,
  [11] = 11,
  [12] = 12,
  [13] = 13,
  [14] = 14,
  [15] = 15,
  [16] = 16,
  [17] = 17,
  [18] = 18,
  [19] = 19,
  [20] = 20,
  [21] = 21,
  [22] = 22,
  [23] = 23,
  [24] = 24,
  [25] = 25,
  [26] = 26,
  [27] = 27,
  [28] = 28,
  [29] = 29,
  [30] = 30,
  [31] = 31,
  [32] = 32,
  [33] = 33,
  [34] = 34,
  [35] = 35,
  [36] = 36,
  [37] = 37,
  [38] = 38,
  [39] = 39,
  [40] = 40,
  [41] = 41,
  [42] = 42,
  [43] = 43,
  [44] = 44,
  [45] = 45,
  [46] = 46,
  [47] = 47,
  [48] = 48,
  [49] = 49,
  [50] = 50,
};

static bool ts_lex(TSLexer *lexer, TSStateId state) {
  START_LEXER();
  eof = lexer->eof(lexer);
  switch (state) {
    case 0:
      if (eof) ADVANCE(1);
      ADVANCE_MAP(
        '(', 2,
        ')', 4,
        ',', 3,
        ';', 5,
        '<', 8,
        '>', 10,
        '[', 6,
        ']', 7,
        '{', 11,
        '|', 9,
        '}', 12,
      );
      if (('\t' <= lookahead && lookahead <= '\r') ||
          lookahead == ' ') SKIP(0);
      if (('0' <= lookahead && lookahead <= '9')) ADVANCE(13);
      if (('A' <= lookahead && lookahead <= 'Z') ||
          lookahead == '_' ||
          ('a' <= lookahead && lookahead <= 'z')) ADVANCE(14);
      END_STATE();
    case 1:
      ACCEPT_TOKEN(ts_builtin_sym_end);
      END_STATE();
    case 2:
      ACCEPT_TOKEN(anon_sym_LPAREN);
      END_STATE();
    case 3:
      ACCEPT_TOKEN(anon_sym_COMMA);
      END_STATE();
    case 4:
      ACCEPT_TOKEN(anon_sym_RPAREN);
      END_STATE();
    case 5:
      ACCEPT_TOKEN(anon_sym_SEMI);
      END_STATE();
    case 6:
      ACCEPT_TOKEN(anon_sym_LBRACK);
      END_STATE();
    case 7:
      ACCEPT_TOKEN(anon_sym_RBRACK);
      END_STATE();
    case 8:
      ACCEPT_TOKEN(anon_sym_LT);
      END_STATE();
    case 9:
      ACCEPT_TOKEN(anon_sym_PIPE);
      END_STATE();
    case 10:
      ACCEPT_TOKEN(anon_sym_GT);
      END_STATE();
    case 11:
      ACCEPT_TOKEN(anon_sym_LBRACE);
      END_STATE();
    case 12:
      ACCEPT_TOKEN(anon_sym_RBRACE);
      END_STATE();
    case 13:
      ACCEPT_TOKEN(sym_number);
      if (('0' <= lookahead && lookahead <= '9')) ADVANCE(13);
      END_STATE();
    case 14:
      ACCEPT_TOKEN(sym_identifier);
      if (('0' <= lookahead && lookahead <= '9') ||
          ('A' <= lookahead && lookahead <= 'Z') ||
          lookahead == '_' ||
          ('a' <= lookahead && lookahead <= 'z')) ADVANCE(14);
      END_STATE();
    default:
      return false;
  }
}

static bool ts_lex_keywords(TSLexer *lexer, TSStateId state) {
  START_LEXER();
  eof = lexer->eof(lexer);
  switch (state) {
    case 0:
      if (lookahead == 'b') ADVANCE(1);
      if (lookahead == 'c') ADVANCE(2);
      if (lookahead == 'f') ADVANCE(3);
      if (lookahead == 'i') ADVANCE(4);
      if (lookahead == 'v') ADVANCE(5);
      if (('\t' <= lookahead && lookahead <= '\r') ||
          lookahead == ' ') SKIP(0);
      END_STATE();
    case 1:
      if (lookahead == 'o') ADVANCE(6);
      END_STATE();
    case 2:
      if (lookahead == 'h') ADVANCE(7);
      END_STATE();
    case 3:
      if (lookahead == 'l') ADVANCE(8);
      END_STATE();
    case 4:
      if (lookahead == 'n') ADVANCE(9);
      END_STATE();
    case 5:
      if (lookahead == 'o') ADVANCE(10);
      END_STATE();
    case 6:
      if (lookahead == 'o') ADVANCE(11);
      END_STATE();
    case 7:
      if (lookahead == 'a') ADVANCE(12);
      END_STATE();
    case 8:
      if (lookahead == 'o') ADVANCE(13);
      END_STATE();
    case 9:
      if (lookahead == 't') ADVANCE(14);
      END_STATE();
    case 10:
      if (lookahead == 'i') ADVANCE(15);
      END_STATE();
    case 11:
      if (lookahead == 'l') ADVANCE(16);
      END_STATE();
    case 12:
      if (lookahead == 'r') ADVANCE(17);
      END_STATE();
    case 13:
      if (lookahead == 'a') ADVANCE(18);
      END_STATE();
    case 14:
      ACCEPT_TOKEN(anon_sym_int);
      END_STATE();
    case 15:
      if (lookahead == 'd') ADVANCE(19);
      END_STATE();
    case 16:
      ACCEPT_TOKEN(anon_sym_bool);
      END_STATE();
    case 17:
      ACCEPT_TOKEN(anon_sym_char);
      END_STATE();
    case 18:
      if (lookahead == 't') ADVANCE(20);
      END_STATE();
    case 19:
      ACCEPT_TOKEN(anon_sym_void);
      END_STATE();
    case 20:
      ACCEPT_TOKEN(anon_sym_float);
      END_STATE();
    default:
      return false;
  }
}

static const TSLexerMode ts_lex_modes[STATE_COUNT] = {
  [0] = {.lex_state = 0},
  [1] = {.lex_state = 0},
  [2] = {.lex_state = 0},
  [3] = {.lex_state = 0},
  [4] = {.lex_state = 0},
  [5] = {.lex_state = 0},
  [6] = {.lex_state = 0},
  [7] = {.lex_state = 0},
  [8] = {.lex_state = 0},
  [9] = {.lex_state = 0},
  [10] = {.lex_state = 0},
  [11] = {.lex_state = 0},
  [12] = {.lex_state = 0},
  [13] = {.lex_state = 0},
  [14] = {.lex_state = 0},
  [15] = {.lex_state = 0},
  [16] = {.lex_state = 0},
  [17] = {.lex_state = 0},
  [18] = {.lex_state = 0},
  [19] = {.lex_state = 0},
  [20] = {.lex_state = 0},
  [21] = {.lex_state = 0},
  [22] = {.lex_state = 0},
  [23] = {.lex_state = 0},
  [24] = {.lex_state = 0},
  [25] = {.lex_state = 0},
  [26] = {.lex_state = 0},
  [27] = {.lex_state = 0},
  [28] = {.lex_state = 0},
  [29] = {.lex_state = 0},
  [30] = {.lex_state = 0},
  [31] = {.lex_state = 0},
  [32] = {.lex_state = 0},
  [33] = {.lex_state = 0},
  [34] = {.lex_state = 0},
  [35] = {.lex_state = 0},
  [36] = {.lex_state = 0},
  [37] = {.lex_state = 0},
  [38] = {.lex_state = 0},
  [39] = {.lex_state = 0},
  [40] = {.lex_state = 0},
  [41] = {.lex_state = 0},
  [42] = {.lex_state = 0},
  [43] = {.lex_state = 0},
  [44] = {.lex_state = 0},
  [45] = {.lex_state = 0},
  [46] = {.lex_state = 0},
  [47] = {.lex_state = 0},
  [48] = {.lex_state = 0},
  [49] = {.lex_state = 0},
  [50] = {.lex_state = 0},
};

static const uint16_t ts_parse_table[LARGE_STATE_COUNT][SYMBOL_COUNT] = {
  [STATE(0)] = {
    [ts_builtin_sym_end] = ACTIONS(1),
    [sym_identifier] = ACTIONS(1),
    [anon_sym_LPAREN] = ACTIONS(1),
    [anon_sym_COMMA] = ACTIONS(1),
    [anon_sym_RPAREN] = ACTIONS(1),
    [anon_sym_SEMI] = ACTIONS(1),
    [anon_sym_void] = ACTIONS(1),
    [anon_sym_int] = ACTIONS(1),
    [anon_sym_char] = ACTIONS(1),
    [anon_sym_float] = ACTIONS(1),
    [anon_sym_bool] = ACTIONS(1),
    [anon_sym_LBRACK] = ACTIONS(1),
    [anon_sym_RBRACK] = ACTIONS(1),
    [anon_sym_LT] = ACTIONS(1),
    [anon_sym_PIPE] = ACTIONS(1),
    [anon_sym_GT] = ACTIONS(1),
    [anon_sym_LBRACE] = ACTIONS(1),
    [anon_sym_RBRACE] = ACTIONS(1),
    [sym_number] = ACTIONS(1),
  },
  [STATE(1)] = {
    [sym_source_file] = STATE(45),
    [sym__item] = STATE(5),
    [sym_function_declaration] = STATE(5),
    [sym_type] = STATE(49),
    [sym_list] = STATE(5),
    [sym_sequence] = STATE(5),
    [sym_block] = STATE(5),
    [sym_sexp] = STATE(5),
    [aux_sym_source_file_repeat1] = STATE(5),
    [ts_builtin_sym_end] = ACTIONS(3),
    [anon_sym_LPAREN] = ACTIONS(5),
    [anon_sym_void] = ACTIONS(7),
    [anon_sym_int] = ACTIONS(7),
    [anon_sym_char] = ACTIONS(7),
    [anon_sym_float] = ACTIONS(7),
    [anon_sym_bool] = ACTIONS(7),
    [anon_sym_LBRACK] = ACTIONS(9),
    [anon_sym_LT] = ACTIONS(11),
    [anon_sym_LBRACE] = ACTIONS(13),
  },
  [STATE(2)] = {
    [ts_builtin_sym_end] = ACTIONS(15),
    [sym_identifier] = ACTIONS(17),
    [anon_sym_LPAREN] = ACTIONS(15),
    [anon_sym_COMMA] = ACTIONS(15),
    [anon_sym_RPAREN] = ACTIONS(15),
    [anon_sym_SEMI] = ACTIONS(15),
    [anon_sym_void] = ACTIONS(17),
    [anon_sym_int] = ACTIONS(17),
    [anon_sym_char] = ACTIONS(17),
    [anon_sym_float] = ACTIONS(17),
    [anon_sym_bool] = ACTIONS(17),
    [anon_sym_LBRACK] = ACTIONS(15),
    [anon_sym_RBRACK] = ACTIONS(15),
    [anon_sym_LT] = ACTIONS(15),
    [anon_sym_PIPE] = ACTIONS(15),
    [anon_sym_GT] = ACTIONS(15),
    [anon_sym_LBRACE] = ACTIONS(15),
    [anon_sym_RBRACE] = ACTIONS(15),
    [sym_number] = ACTIONS(15),
  },
  [STATE(3)] = {
    [ts_builtin_sym_end] = ACTIONS(19),
    [sym_identifier] = ACTIONS(21),
    [anon_sym_LPAREN] = ACTIONS(19),
    [anon_sym_COMMA] = ACTIONS(19),
    [anon_sym_RPAREN] = ACTIONS(19),
    [anon_sym_SEMI] = ACTIONS(19),
    [anon_sym_void] = ACTIONS(21),
    [anon_sym_int] = ACTIONS(21),
    [anon_sym_char] = ACTIONS(21),
    [anon_sym_float] = ACTIONS(21),
    [anon_sym_bool] = ACTIONS(21),
    [anon_sym_LBRACK] = ACTIONS(19),
    [anon_sym_RBRACK] = ACTIONS(19),
    [anon_sym_LT] = ACTIONS(19),
    [anon_sym_PIPE] = ACTIONS(19),
    [anon_sym_GT] = ACTIONS(19),
    [anon_sym_LBRACE] = ACTIONS(19),
    [anon_sym_RBRACE] = ACTIONS(19),
    [sym_number] = ACTIONS(19),
  },
  [STATE(4)] = {
    [sym__item] = STATE(4),
    [sym_function_declaration] = STATE(4),
    [sym_type] = STATE(49),
    [sym_list] = STATE(4),
    [sym_sequence] = STATE(4),
    [sym_block] = STATE(4),
    [sym_sexp] = STATE(4),
    [aux_sym_source_file_repeat1] = STATE(4),
    [ts_builtin_sym_end] = ACTIONS(23),
    [anon_sym_LPAREN] = ACTIONS(25),
    [anon_sym_void] = ACTIONS(28),
    [anon_sym_int] = ACTIONS(28),
    [anon_sym_char] = ACTIONS(28),
    [anon_sym_float] = ACTIONS(28),
    [anon_sym_bool] = ACTIONS(28),
    [anon_sym_LBRACK] = ACTIONS(31),
    [anon_sym_LT] = ACTIONS(34),
    [anon_sym_LBRACE] = ACTIONS(37),
  },
  [STATE(5)] = {
    [sym__item] = STATE(4),
    [sym_function_declaration] = STATE(4),
    [sym_type] = STATE(49),
    [sym_list] = STATE(4),
    [sym_sequence] = STATE(4),
    [sym_block] = STATE(4),
    [sym_sexp] = STATE(4),
    [aux_sym_source_file_repeat1] = STATE(4),
    [ts_builtin_sym_end] = ACTIONS(40),
    [anon_sym_LPAREN] = ACTIONS(5),
    [anon_sym_void] = ACTIONS(7),
    [anon_sym_int] = ACTIONS(7),
    [anon_sym_char] = ACTIONS(7),
    [anon_sym_float] = ACTIONS(7),
    [anon_sym_bool] = ACTIONS(7),
    [anon_sym_LBRACK] = ACTIONS(9),
    [anon_sym_LT] = ACTIONS(11),
    [anon_sym_LBRACE] = ACTIONS(13),
  },
};

static const uint16_t ts_small_parse_table[] = {
  [0] = 1,
    ACTIONS(42), 16,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_COMMA,
      anon_sym_SEMI,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_RBRACK,
      anon_sym_LT,
      anon_sym_PIPE,
      anon_sym_GT,
      anon_sym_LBRACE,
      anon_sym_RBRACE,
  [19] = 1,
    ACTIONS(44), 16,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_COMMA,
      anon_sym_SEMI,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_RBRACK,
      anon_sym_LT,
      anon_sym_PIPE,
      anon_sym_GT,
      anon_sym_LBRACE,
      anon_sym_RBRACE,
  [38] = 1,
    ACTIONS(46), 16,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_COMMA,
      anon_sym_SEMI,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_RBRACK,
      anon_sym_LT,
      anon_sym_PIPE,
      anon_sym_GT,
      anon_sym_LBRACE,
      anon_sym_RBRACE,
  [57] = 1,
    ACTIONS(48), 16,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_COMMA,
      anon_sym_SEMI,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_RBRACK,
      anon_sym_LT,
      anon_sym_PIPE,
      anon_sym_GT,
      anon_sym_LBRACE,
      anon_sym_RBRACE,
  [76] = 1,
    ACTIONS(50), 16,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_COMMA,
      anon_sym_SEMI,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_RBRACK,
      anon_sym_LT,
      anon_sym_PIPE,
      anon_sym_GT,
      anon_sym_LBRACE,
      anon_sym_RBRACE,
  [95] = 1,
    ACTIONS(52), 16,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_COMMA,
      anon_sym_SEMI,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_RBRACK,
      anon_sym_LT,
      anon_sym_PIPE,
      anon_sym_GT,
      anon_sym_LBRACE,
      anon_sym_RBRACE,
  [114] = 1,
    ACTIONS(54), 16,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_COMMA,
      anon_sym_SEMI,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_RBRACK,
      anon_sym_LT,
      anon_sym_PIPE,
      anon_sym_GT,
      anon_sym_LBRACE,
      anon_sym_RBRACE,
  [133] = 1,
    ACTIONS(56), 16,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_COMMA,
      anon_sym_SEMI,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_RBRACK,
      anon_sym_LT,
      anon_sym_PIPE,
      anon_sym_GT,
      anon_sym_LBRACE,
      anon_sym_RBRACE,
  [152] = 1,
    ACTIONS(58), 16,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_COMMA,
      anon_sym_SEMI,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_RBRACK,
      anon_sym_LT,
      anon_sym_PIPE,
      anon_sym_GT,
      anon_sym_LBRACE,
      anon_sym_RBRACE,
  [171] = 7,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(9), 1,
      anon_sym_LBRACK,
    ACTIONS(11), 1,
      anon_sym_LT,
    ACTIONS(13), 1,
      anon_sym_LBRACE,
    ACTIONS(62), 1,
      anon_sym_RBRACE,
    ACTIONS(60), 2,
      sym_number,
      sym_identifier,
    STATE(39), 5,
      sym_list,
      sym_sequence,
      sym_block,
      sym_sexp,
      sym__element,
  [198] = 7,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(9), 1,
      anon_sym_LBRACK,
    ACTIONS(11), 1,
      anon_sym_LT,
    ACTIONS(13), 1,
      anon_sym_LBRACE,
    ACTIONS(66), 1,
      anon_sym_RBRACK,
    ACTIONS(64), 2,
      sym_number,
      sym_identifier,
    STATE(35), 5,
      sym_list,
      sym_sequence,
      sym_block,
      sym_sexp,
      sym__element,
  [225] = 7,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(9), 1,
      anon_sym_LBRACK,
    ACTIONS(11), 1,
      anon_sym_LT,
    ACTIONS(13), 1,
      anon_sym_LBRACE,
    ACTIONS(70), 1,
      anon_sym_RBRACE,
    ACTIONS(68), 2,
      sym_number,
      sym_identifier,
    STATE(44), 5,
      sym_list,
      sym_sequence,
      sym_block,
      sym_sexp,
      sym__element,
  [252] = 7,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(9), 1,
      anon_sym_LBRACK,
    ACTIONS(11), 1,
      anon_sym_LT,
    ACTIONS(13), 1,
      anon_sym_LBRACE,
    ACTIONS(72), 1,
      anon_sym_RBRACE,
    ACTIONS(68), 2,
      sym_number,
      sym_identifier,
    STATE(44), 5,
      sym_list,
      sym_sequence,
      sym_block,
      sym_sexp,
      sym__element,
  [279] = 6,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(9), 1,
      anon_sym_LBRACK,
    ACTIONS(11), 1,
      anon_sym_LT,
    ACTIONS(13), 1,
      anon_sym_LBRACE,
    ACTIONS(74), 2,
      sym_number,
      sym_identifier,
    STATE(43), 5,
      sym_list,
      sym_sequence,
      sym_block,
      sym_sexp,
      sym__element,
  [303] = 6,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(9), 1,
      anon_sym_LBRACK,
    ACTIONS(11), 1,
      anon_sym_LT,
    ACTIONS(13), 1,
      anon_sym_LBRACE,
    ACTIONS(76), 2,
      sym_number,
      sym_identifier,
    STATE(42), 5,
      sym_list,
      sym_sequence,
      sym_block,
      sym_sexp,
      sym__element,
  [327] = 6,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(9), 1,
      anon_sym_LBRACK,
    ACTIONS(11), 1,
      anon_sym_LT,
    ACTIONS(13), 1,
      anon_sym_LBRACE,
    ACTIONS(78), 2,
      sym_number,
      sym_identifier,
    STATE(36), 5,
      sym_list,
      sym_sequence,
      sym_block,
      sym_sexp,
      sym__element,
  [351] = 6,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(9), 1,
      anon_sym_LBRACK,
    ACTIONS(11), 1,
      anon_sym_LT,
    ACTIONS(13), 1,
      anon_sym_LBRACE,
    ACTIONS(68), 2,
      sym_number,
      sym_identifier,
    STATE(44), 5,
      sym_list,
      sym_sequence,
      sym_block,
      sym_sexp,
      sym__element,
  [375] = 1,
    ACTIONS(80), 10,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_LT,
      anon_sym_LBRACE,
  [388] = 1,
    ACTIONS(82), 10,
      ts_builtin_sym_end,
      anon_sym_LPAREN,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
      anon_sym_LBRACK,
      anon_sym_LT,
      anon_sym_LBRACE,
  [401] = 4,
    ACTIONS(84), 1,
      anon_sym_RPAREN,
    STATE(26), 1,
      aux_sym_function_declaration_repeat1,
    STATE(48), 1,
      sym_type,
    ACTIONS(7), 5,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
  [418] = 4,
    ACTIONS(86), 1,
      anon_sym_RPAREN,
    STATE(27), 1,
      aux_sym_function_declaration_repeat1,
    STATE(48), 1,
      sym_type,
    ACTIONS(7), 5,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
  [435] = 4,
    ACTIONS(88), 1,
      anon_sym_RPAREN,
    STATE(27), 1,
      aux_sym_function_declaration_repeat1,
    STATE(48), 1,
      sym_type,
    ACTIONS(90), 5,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
  [452] = 4,
    ACTIONS(96), 1,
      anon_sym_LPAREN,
    ACTIONS(99), 1,
      anon_sym_RPAREN,
    ACTIONS(93), 2,
      sym_number,
      sym_identifier,
    STATE(28), 3,
      sym_sexp,
      sym__atom,
      aux_sym_sexp_repeat1,
  [468] = 4,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(103), 1,
      anon_sym_RPAREN,
    ACTIONS(101), 2,
      sym_number,
      sym_identifier,
    STATE(28), 3,
      sym_sexp,
      sym__atom,
      aux_sym_sexp_repeat1,
  [484] = 4,
    ACTIONS(5), 1,
      anon_sym_LPAREN,
    ACTIONS(107), 1,
      anon_sym_RPAREN,
    ACTIONS(105), 2,
      sym_number,
      sym_identifier,
    STATE(29), 3,
      sym_sexp,
      sym__atom,
      aux_sym_sexp_repeat1,
  [500] = 1,
    ACTIONS(88), 6,
      anon_sym_RPAREN,
      anon_sym_void,
      anon_sym_int,
      anon_sym_char,
      anon_sym_float,
      anon_sym_bool,
  [509] = 3,
    ACTIONS(109), 1,
      anon_sym_COMMA,
    ACTIONS(111), 1,
      anon_sym_RBRACK,
    STATE(37), 1,
      aux_sym_list_repeat1,
  [519] = 3,
    ACTIONS(113), 1,
      anon_sym_PIPE,
    ACTIONS(115), 1,
      anon_sym_GT,
    STATE(40), 1,
      aux_sym_sequence_repeat1,
  [529] = 3,
    ACTIONS(70), 1,
      anon_sym_RBRACE,
    ACTIONS(117), 1,
      anon_sym_SEMI,
    STATE(38), 1,
      aux_sym_block_repeat1,
  [539] = 3,
    ACTIONS(109), 1,
      anon_sym_COMMA,
    ACTIONS(119), 1,
      anon_sym_RBRACK,
    STATE(32), 1,
      aux_sym_list_repeat1,
  [549] = 3,
    ACTIONS(113), 1,
      anon_sym_PIPE,
    ACTIONS(121), 1,
      anon_sym_GT,
    STATE(33), 1,
      aux_sym_sequence_repeat1,
  [559] = 3,
    ACTIONS(123), 1,
      anon_sym_COMMA,
    ACTIONS(126), 1,
      anon_sym_RBRACK,
    STATE(37), 1,
      aux_sym_list_repeat1,
  [569] = 3,
    ACTIONS(128), 1,
      anon_sym_SEMI,
    ACTIONS(131), 1,
      anon_sym_RBRACE,
    STATE(38), 1,
      aux_sym_block_repeat1,
  [579] = 3,
    ACTIONS(133), 1,
      anon_sym_SEMI,
    ACTIONS(135), 1,
      anon_sym_RBRACE,
    STATE(34), 1,
      aux_sym_block_repeat1,
  [589] = 3,
    ACTIONS(137), 1,
      anon_sym_PIPE,
    ACTIONS(140), 1,
      anon_sym_GT,
    STATE(40), 1,
      aux_sym_sequence_repeat1,
  [599] = 1,
    ACTIONS(142), 2,
      anon_sym_COMMA,
      sym_identifier,
  [604] = 1,
    ACTIONS(126), 2,
      anon_sym_COMMA,
      anon_sym_RBRACK,
  [609] = 1,
    ACTIONS(140), 2,
      anon_sym_PIPE,
      anon_sym_GT,
  [614] = 1,
    ACTIONS(131), 2,
      anon_sym_SEMI,
      anon_sym_RBRACE,
  [619] = 1,
    ACTIONS(144), 1,
      ts_builtin_sym_end,
  [623] = 1,
    ACTIONS(146), 1,
      anon_sym_LPAREN,
  [627] = 1,
    ACTIONS(148), 1,
      anon_sym_SEMI,
  [631] = 1,
    ACTIONS(150), 1,
      anon_sym_COMMA,
  [635] = 1,
    ACTIONS(152), 1,
      sym_identifier,
  [639] = 1,
    ACTIONS(154), 1,
      anon_sym_SEMI,
};

static const uint32_t ts_small_parse_table_map[] = {
  [SMALL_STATE(6)] = 0,
  [SMALL_STATE(7)] = 19,
  [SMALL_STATE(8)] = 38,
  [SMALL_STATE(9)] = 57,
  [SMALL_STATE(10)] = 76,
  [SMALL_STATE(11)] = 95,
  [SMALL_STATE(12)] = 114,
  [SMALL_STATE(13)] = 133,
  [SMALL_STATE(14)] = 152,
  [SMALL_STATE(15)] = 171,
  [SMALL_STATE(16)] = 198,
  [SMALL_STATE(17)] = 225,
  [SMALL_STATE(18)] = 252,
  [SMALL_STATE(19)] = 279,
  [SMALL_STATE(20)] = 303,
  [SMALL_STATE(21)] = 327,
  [SMALL_STATE(22)] = 351,
  [SMALL_STATE(23)] = 375,
  [SMALL_STATE(24)] = 388,
  [SMALL_STATE(25)] = 401,
  [SMALL_STATE(26)] = 418,
  [SMALL_STATE(27)] = 435,
  [SMALL_STATE(28)] = 452,
  [SMALL_STATE(29)] = 468,
  [SMALL_STATE(30)] = 484,
  [SMALL_STATE(31)] = 500,
  [SMALL_STATE(32)] = 509,
  [SMALL_STATE(33)] = 519,
  [SMALL_STATE(34)] = 529,
  [SMALL_STATE(35)] = 539,
  [SMALL_STATE(36)] = 549,
  [SMALL_STATE(37)] = 559,
  [SMALL_STATE(38)] = 569,
  [SMALL_STATE(39)] = 579,
  [SMALL_STATE(40)] = 589,
  [SMALL_STATE(41)] = 599,
  [SMALL_STATE(42)] = 604,
  [SMALL_STATE(43)] = 609,
  [SMALL_STATE(44)] = 614,
  [SMALL_STATE(45)] = 619,
  [SMALL_STATE(46)] = 623,
  [SMALL_STATE(47)] = 627,
  [SMALL_STATE(48)] = 631,
  [SMALL_STATE(49)] = 635,
  [SMALL_STATE(50)] = 639,
};

static const TSParseActionEntry ts_parse_actions[] = {
  [0] = {.entry = {.count = 0, .reusable = false}},
  [1] = {.entry = {.count = 1, .reusable = false}}, RECOVER(),
  [3] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_source_file, 0, 0, 0),
  [5] = {.entry = {.count = 1, .reusable = true}}, SHIFT(30),
  [7] = {.entry = {.count = 1, .reusable = true}}, SHIFT(41),
  [9] = {.entry = {.count = 1, .reusable = true}}, SHIFT(16),
  [11] = {.entry = {.count = 1, .reusable = true}}, SHIFT(21),
  [13] = {.entry = {.count = 1, .reusable = true}}, SHIFT(15),
  [15] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_sexp, 3, 0, 0),
  [17] = {.entry = {.count = 1, .reusable = false}}, REDUCE(sym_sexp, 3, 0, 0),
  [19] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_sexp, 2, 0, 0),
  [21] = {.entry = {.count = 1, .reusable = false}}, REDUCE(sym_sexp, 2, 0, 0),
  [23] = {.entry = {.count = 1, .reusable = true}}, REDUCE(aux_sym_source_file_repeat1, 2, 0, 0),
  [25] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_source_file_repeat1, 2, 0, 0), SHIFT_REPEAT(30),
  [28] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_source_file_repeat1, 2, 0, 0), SHIFT_REPEAT(41),
  [31] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_source_file_repeat1, 2, 0, 0), SHIFT_REPEAT(16),
  [34] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_source_file_repeat1, 2, 0, 0), SHIFT_REPEAT(21),
  [37] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_source_file_repeat1, 2, 0, 0), SHIFT_REPEAT(15),
  [40] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_source_file, 1, 0, 0),
  [42] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_list, 2, 0, 0),
  [44] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_block, 2, 0, 0),
  [46] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_list, 3, 0, 0),
  [48] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_sequence, 3, 0, 0),
  [50] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_sequence, 4, 0, 0),
  [52] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_block, 3, 0, 0),
  [54] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_list, 4, 0, 0),
  [56] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_block, 4, 0, 0),
  [58] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_block, 5, 0, 0),
  [60] = {.entry = {.count = 1, .reusable = true}}, SHIFT(39),
  [62] = {.entry = {.count = 1, .reusable = true}}, SHIFT(7),
  [64] = {.entry = {.count = 1, .reusable = true}}, SHIFT(35),
  [66] = {.entry = {.count = 1, .reusable = true}}, SHIFT(6),
  [68] = {.entry = {.count = 1, .reusable = true}}, SHIFT(44),
  [70] = {.entry = {.count = 1, .reusable = true}}, SHIFT(13),
  [72] = {.entry = {.count = 1, .reusable = true}}, SHIFT(14),
  [74] = {.entry = {.count = 1, .reusable = true}}, SHIFT(43),
  [76] = {.entry = {.count = 1, .reusable = true}}, SHIFT(42),
  [78] = {.entry = {.count = 1, .reusable = true}}, SHIFT(36),
  [80] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_function_declaration, 5, 0, 1),
  [82] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_function_declaration, 6, 0, 1),
  [84] = {.entry = {.count = 1, .reusable = true}}, SHIFT(47),
  [86] = {.entry = {.count = 1, .reusable = true}}, SHIFT(50),
  [88] = {.entry = {.count = 1, .reusable = true}}, REDUCE(aux_sym_function_declaration_repeat1, 2, 0, 0),
  [90] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_function_declaration_repeat1, 2, 0, 0), SHIFT_REPEAT(41),
  [93] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_sexp_repeat1, 2, 0, 0), SHIFT_REPEAT(28),
  [96] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_sexp_repeat1, 2, 0, 0), SHIFT_REPEAT(30),
  [99] = {.entry = {.count = 1, .reusable = true}}, REDUCE(aux_sym_sexp_repeat1, 2, 0, 0),
  [101] = {.entry = {.count = 1, .reusable = true}}, SHIFT(28),
  [103] = {.entry = {.count = 1, .reusable = true}}, SHIFT(2),
  [105] = {.entry = {.count = 1, .reusable = true}}, SHIFT(29),
  [107] = {.entry = {.count = 1, .reusable = true}}, SHIFT(3),
  [109] = {.entry = {.count = 1, .reusable = true}}, SHIFT(20),
  [111] = {.entry = {.count = 1, .reusable = true}}, SHIFT(12),
  [113] = {.entry = {.count = 1, .reusable = true}}, SHIFT(19),
  [115] = {.entry = {.count = 1, .reusable = true}}, SHIFT(10),
  [117] = {.entry = {.count = 1, .reusable = true}}, SHIFT(18),
  [119] = {.entry = {.count = 1, .reusable = true}}, SHIFT(8),
  [121] = {.entry = {.count = 1, .reusable = true}}, SHIFT(9),
  [123] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_list_repeat1, 2, 0, 0), SHIFT_REPEAT(20),
  [126] = {.entry = {.count = 1, .reusable = true}}, REDUCE(aux_sym_list_repeat1, 2, 0, 0),
  [128] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_block_repeat1, 2, 0, 0), SHIFT_REPEAT(22),
  [131] = {.entry = {.count = 1, .reusable = true}}, REDUCE(aux_sym_block_repeat1, 2, 0, 0),
  [133] = {.entry = {.count = 1, .reusable = true}}, SHIFT(17),
  [135] = {.entry = {.count = 1, .reusable = true}}, SHIFT(11),
  [137] = {.entry = {.count = 2, .reusable = true}}, REDUCE(aux_sym_sequence_repeat1, 2, 0, 0), SHIFT_REPEAT(19),
  [140] = {.entry = {.count = 1, .reusable = true}}, REDUCE(aux_sym_sequence_repeat1, 2, 0, 0),
  [142] = {.entry = {.count = 1, .reusable = true}}, REDUCE(sym_type, 1, 0, 0),
  [144] = {.entry = {.count = 1, .reusable = true}},  ACCEPT_INPUT(),
  [146] = {.entry = {.count = 1, .reusable = true}}, SHIFT(25),
  [148] = {.entry = {.count = 1, .reusable = true}}, SHIFT(23),
  [150] = {.entry = {.count = 1, .reusable = true}}, SHIFT(31),
  [152] = {.entry = {.count = 1, .reusable = true}}, SHIFT(46),
  [154] = {.entry = {.count = 1, .reusable = true}}, SHIFT(24),
};

#ifdef __cplusplus
extern "C" {
#endif
#ifdef TREE_SITTER_HIDE_SYMBOLS
#define TS_PUBLIC
#elif defined(_WIN32)
#define TS_PUBLIC __declspec(dllexport)
#else
#define TS_PUBLIC __attribute__((visibility("default")))
#endif

TS_PUBLIC const TSLanguage *tree_sitter_toy(void) {
  static const TSLanguage language = {
    .abi_version = LANGUAGE_VERSION,
    .symbol_count = SYMBOL_COUNT,
    .alias_count = ALIAS_COUNT,
    .token_count = TOKEN_COUNT,
    .external_token_count = EXTERNAL_TOKEN_COUNT,
    .state_count = STATE_COUNT,
    .large_state_count = LARGE_STATE_COUNT,
    .production_id_count = PRODUCTION_ID_COUNT,
    .supertype_count = SUPERTYPE_COUNT,
    .field_count = FIELD_COUNT,
    .max_alias_sequence_length = MAX_ALIAS_SEQUENCE_LENGTH,
    .parse_table = &ts_parse_table[0][0],
    .small_parse_table = ts_small_parse_table,
    .small_parse_table_map = ts_small_parse_table_map,
    .parse_actions = ts_parse_actions,
    .symbol_names = ts_symbol_names,
    .field_names = ts_field_names,
    .field_map_slices = ts_field_map_slices,
    .field_map_entries = ts_field_map_entries,
    .symbol_metadata = ts_symbol_metadata,
    .public_symbol_map = ts_symbol_map,
    .alias_map = ts_non_terminal_alias_map,
    .alias_sequences = &ts_alias_sequences[0][0],
    .lex_modes = (const void*)ts_lex_modes,
    .lex_fn = ts_lex,
    .keyword_lex_fn = ts_lex_keywords,
    .keyword_capture_token = sym_identifier,
    .primary_state_ids = ts_primary_state_ids,
    .name = "toy",
    .max_reserved_word_set_size = 0,
    .metadata = {
      .major_version = 0,
      .minor_version = 0,
      .patch_version = 0,
    },
  };
  return &language;
}
#ifdef __cplusplus
}
#endif
