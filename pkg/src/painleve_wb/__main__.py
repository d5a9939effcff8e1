from painleve_wb.cli.main import main

raise SystemExit(main())
