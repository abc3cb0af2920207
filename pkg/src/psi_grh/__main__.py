from psi_grh.cli import main

raise SystemExit(main())
